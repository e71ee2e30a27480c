#include "dowker/formats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <fstream>
#include <sstream>

namespace dowker {

namespace {

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
    throw input_error("line " + std::to_string(line_no) + ": " + what);
}

std::vector<double> parse_csv_row(const std::string& line, std::size_t line_no) {
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) comma = line.size();
        const std::string field = line.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            const double v = std::stod(field, &used);
            // allow trailing whitespace only
            for (std::size_t i = used; i < field.size(); ++i) {
                if (!std::isspace(static_cast<unsigned char>(field[i]))) {
                    fail_line(line_no, "trailing characters in field '" + field + "'");
                }
            }
            row.push_back(v);
        } catch (const std::invalid_argument&) {
            fail_line(line_no, "not a number: '" + field + "'");
        } catch (const std::out_of_range&) {
            fail_line(line_no, "number out of range: '" + field + "'");
        }
        pos = comma + 1;
        if (comma == line.size()) break;
    }
    return row;
}

std::vector<std::vector<double>> read_csv_rows(std::istream& in, bool skip_header) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_pending = skip_header;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        rows.push_back(parse_csv_row(line, line_no));
        if (rows.size() > 1 && rows.back().size() != rows.front().size()) {
            fail_line(line_no, "row has " + std::to_string(rows.back().size()) +
                                   " fields, expected " + std::to_string(rows.front().size()));
        }
    }
    return rows;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open " + path + " for writing");
    return out;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

PointCloud read_point_cloud_csv(std::istream& in, bool skip_header) {
    return PointCloud(read_csv_rows(in, skip_header));
}

PointCloud read_point_cloud_csv_file(const std::string& path, bool skip_header) {
    auto in = open_input(path);
    return read_point_cloud_csv(in, skip_header);
}

LambdaMatrix read_lambda_csv(std::istream& in, bool skip_header) {
    auto rows = read_csv_rows(in, skip_header);
    if (rows.empty()) throw input_error("lambda csv: no data rows");
    return LambdaMatrix(std::move(rows));
}

LambdaMatrix read_lambda_csv_file(const std::string& path, bool skip_header) {
    auto in = open_input(path);
    return read_lambda_csv(in, skip_header);
}

void write_bifiltration(std::ostream& out, const BifilteredComplex& C, bool negate_weight) {
    out << "bifiltration-dowker v1\n";
    out << "axes: r " << (negate_weight ? "weight-negated" : "weight-reversed") << "\n";
    for (const auto& fs : C.simplices) {
        for (std::size_t i = 0; i < fs.vertices.size(); ++i) {
            if (i) out << ' ';
            out << fs.vertices[i];
        }
        out << " ;";
        for (const auto& bd : fs.appearances) {
            out << ' ' << format_real(bd.r) << ' ' << (negate_weight ? -bd.m : bd.m);
        }
        out << '\n';
    }
}

BifilteredComplex read_bifiltration(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    };

    if (!next_line() || line != "bifiltration-dowker v1") {
        fail_line(1, "expected header 'bifiltration-dowker v1'");
    }
    bool negated = false;
    if (!next_line()) fail_line(2, "missing axes line");
    if (line == "axes: r weight-reversed") {
        negated = false;
    } else if (line == "axes: r weight-negated") {
        negated = true;
    } else {
        fail_line(2, "unrecognized axes declaration '" + line + "'");
    }

    BifilteredComplex C;
    int max_dim = -1;
    int m_max = 1;
    double r_max = 0.0;
    while (next_line()) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        FilteredSimplex fs;
        std::string tok;
        bool after_sep = false;
        std::vector<double> pending;
        while (ss >> tok) {
            if (tok == ";") {
                if (after_sep) fail_line(line_no, "duplicate ';'");
                after_sep = true;
                continue;
            }
            try {
                if (!after_sep) {
                    fs.vertices.push_back(std::stoi(tok));
                } else {
                    pending.push_back(std::stod(tok));
                }
            } catch (const std::exception&) {
                fail_line(line_no, "bad token '" + tok + "'");
            }
        }
        if (!after_sep) fail_line(line_no, "missing ';' separator");
        if (fs.vertices.empty()) fail_line(line_no, "simplex with no vertices");
        if (!std::is_sorted(fs.vertices.begin(), fs.vertices.end()) ||
            std::adjacent_find(fs.vertices.begin(), fs.vertices.end()) != fs.vertices.end()) {
            fail_line(line_no, "vertices must be strictly ascending");
        }
        if (pending.size() % 2 != 0) fail_line(line_no, "odd number of bidegree fields");
        if (pending.empty()) fail_line(line_no, "simplex with empty bidegree list");
        for (std::size_t i = 0; i < pending.size(); i += 2) {
            const double r = pending[i];
            int m = static_cast<int>(pending[i + 1]);
            if (pending[i + 1] != static_cast<double>(m)) {
                fail_line(line_no, "weight must be an integer");
            }
            if (negated) m = -m;
            if (m < 1) fail_line(line_no, "weight must be positive after decoding");
            if (!fs.appearances.empty()) {
                if (m <= fs.appearances.back().m) {
                    fail_line(line_no, "weights must be strictly increasing");
                }
                if (r < fs.appearances.back().r) {
                    fail_line(line_no, "radii must be nondecreasing");
                }
            }
            fs.appearances.push_back({m, r});
            m_max = std::max(m_max, m);
            r_max = std::max(r_max, r);
        }
        max_dim = std::max(max_dim, static_cast<int>(fs.vertices.size()) - 1);
        C.simplices.push_back(std::move(fs));
    }
    C.max_dim = std::max(max_dim, 0);
    C.m_max = m_max;
    C.r_max = C.simplices.empty() ? std::numeric_limits<double>::infinity() : r_max;
    return C;
}

void write_bifiltration_file(const std::string& path, const BifilteredComplex& C,
                             bool negate_weight) {
    auto out = open_output(path);
    write_bifiltration(out, C, negate_weight);
}

BifilteredComplex read_bifiltration_file(const std::string& path) {
    auto in = open_input(path);
    return read_bifiltration(in);
}

void write_hilbert_csv(std::ostream& out, const HilbertGrid& grid) {
    out << "m\\r";
    for (double r : grid.r_values) out << ',' << format_real(r);
    out << '\n';
    for (std::size_t i = 0; i < grid.m_values.size(); ++i) {
        out << format_real(grid.m_values[i]);
        for (std::size_t j = 0; j < grid.r_values.size(); ++j) {
            out << ',' << grid.betti[i][j];
        }
        out << '\n';
    }
}

void write_hilbert_csv_file(const std::string& path, const HilbertGrid& grid) {
    auto out = open_output(path);
    write_hilbert_csv(out, grid);
}

void write_hilbert_pgm(std::ostream& out, const HilbertGrid& grid) {
    long v_max = 0;
    for (const auto& row : grid.betti) {
        for (long v : row) v_max = std::max(v_max, v);
    }
    out << "P2\n" << grid.r_values.size() << ' ' << grid.m_values.size() << "\n255\n";
    const double denom = v_max > 0 ? std::log1p(static_cast<double>(v_max)) : 1.0;
    for (const auto& row : grid.betti) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            const int gray =
                v_max > 0
                    ? static_cast<int>(std::lround(255.0 * std::log1p(static_cast<double>(row[j])) / denom))
                    : 0;
            out << (j ? " " : "") << gray;
        }
        out << '\n';
    }
}

void write_hilbert_pgm_file(const std::string& path, const HilbertGrid& grid) {
    auto out = open_output(path);
    write_hilbert_pgm(out, grid);
}

}  // namespace dowker
