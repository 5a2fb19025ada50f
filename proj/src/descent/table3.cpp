#include "isodescent/descent.hpp"

#include <fstream>
#include <sstream>

namespace isodescent {

std::vector<Table3Row> load_table3(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open fixture file " + path);
    std::vector<Table3Row> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            if (line.rfind("r,", 0) == 0) continue;
        }
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cols.push_back(cell);
        if (cols.size() != 4) throw DomainError("fixture row needs 4 columns: " + line);
        Table3Row row;
        row.r = parse_rational(cols[0]);
        row.d_expr = cols[1];
        row.d = parse_product(cols[1]);
        row.z = parse_rational(cols[2]);
        row.w = parse_rational(cols[3]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Table3Check> verify_table3(const std::vector<Table3Row>& rows) {
    std::vector<Table3Check> out;
    for (auto& row : rows) {
        Table3Check c;
        c.row = row;
        Rational t = t_from_r(row.r);
        Family f = build_family(t);
        Rational z2 = row.z * row.z, e = row.w * row.w - row.d;
        c.residual = row.d * (row.w - z2 / (4 * t * t)) * z2 - e * e;
        c.on_space = c.residual == 0;
        if (row.z != 0) {
            c.image = psi_prime(row.z, row.w, row.d, t);
            c.image_on_curve = f.E.contains(c.image);
            c.class_matches = same_class(delta_prime_value(f, c.image), row.d, 4);
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace isodescent
