#ifndef DOWKER_FORMATS_HPP
#define DOWKER_FORMATS_HPP

#include <iosfwd>
#include <string>

#include "dowker/core.hpp"

namespace dowker {

/// Point-cloud CSV: one point per line, comma-separated decimal reals,
/// lines starting with '#' ignored. With skip_header, line 1 is dropped.
/// Parse errors name the offending line.
PointCloud read_point_cloud_csv(std::istream& in, bool skip_header = false);
PointCloud read_point_cloud_csv_file(const std::string& path, bool skip_header = false);

/// Lambda CSV: dense matrix, row i = witness values of vertex i.
LambdaMatrix read_lambda_csv(std::istream& in, bool skip_header = false);
LambdaMatrix read_lambda_csv_file(const std::string& path, bool skip_header = false);

/// Bifiltration text format v1. Header declares the weight-axis
/// convention; with negate_weight all m values are written negated so
/// strictly-ascending-axis consumers can ingest the file. Radii use 17
/// significant digits so doubles round-trip exactly.
void write_bifiltration(std::ostream& out, const BifilteredComplex& C,
                        bool negate_weight = false);
BifilteredComplex read_bifiltration(std::istream& in);
void write_bifiltration_file(const std::string& path, const BifilteredComplex& C,
                             bool negate_weight = false);
BifilteredComplex read_bifiltration_file(const std::string& path);

/// Hilbert CSV: first row "m\r, r_1, ..."; then one row per m ascending.
void write_hilbert_csv(std::ostream& out, const HilbertGrid& grid);
void write_hilbert_csv_file(const std::string& path, const HilbertGrid& grid);

/// ASCII PGM heatmap (P2), width = |r_values|, height = |m_values|,
/// maxval 255, gray = round(255 * ln(1+v) / ln(1+v_max)). An all-zero
/// grid emits all-zero pixels.
void write_hilbert_pgm(std::ostream& out, const HilbertGrid& grid);
void write_hilbert_pgm_file(const std::string& path, const HilbertGrid& grid);

}  // namespace dowker

#endif  // DOWKER_FORMATS_HPP
