#pragma once

#include <optional>
#include <string>
#include <vector>

#include "janet/binomial.hpp"
#include "janet/monomial.hpp"
#include "janet/order.hpp"
#include "janet/toric.hpp"

namespace janet {

// Ordered variable names; declaration position is the order rank, the
// first name being the greatest.
struct VarTable {
    std::vector<std::string> names;

    int ambient() const { return static_cast<int>(names.size()); }
    std::optional<VarIndex> index(const std::string& name) const;
};

struct IdealFile {
    VarTable vars;
    MonomialOrder order;
    std::vector<Binomial> generators;
};

// `name[^k]` factors joined by `*`; `1` is the unit. Exponents must be
// positive.
Monomial parse_monomial(const std::string& text, const VarTable& vars, int line_no);

// `<mono> - <mono>`, oriented under ord; equal sides are rejected.
Binomial parse_binomial(const std::string& text, const VarTable& vars, const MonomialOrder& ord,
                        int line_no);

// Full ideal file: `vars:` line, `order:` line (lex, degrevlex, or
// weight c1 … cn), then one binomial per line. Blank lines are skipped.
IdealFile parse_ideal(const std::string& text);

// First line `m n`, then m rows of n integers.
Matrix parse_matrix(const std::string& text);

// Matrix file optionally followed by three more integer lines: b, c, x0.
// Either all three are present or none.
struct IpFile {
    Matrix A;
    std::optional<std::vector<int64_t>> b;
    std::optional<std::vector<int64_t>> c;
    std::optional<std::vector<int64_t>> x0;
};

IpFile parse_ip_file(const std::string& text);

// One line of whitespace-separated integers.
std::vector<int64_t> parse_int_vector(const std::string& text);

}  // namespace janet
