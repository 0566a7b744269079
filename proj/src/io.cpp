#include "janet/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "janet/errors.hpp"

namespace janet {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
        return false;
    }
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return true;
}

int64_t parse_int(const std::string& tok, int line_no) {
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("malformed integer '" + tok + "'", line_no);
    }
    return value;
}

}  // namespace

std::optional<VarIndex> VarTable::index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
            return static_cast<VarIndex>(i + 1);
        }
    }
    return std::nullopt;
}

Monomial parse_monomial(const std::string& text, const VarTable& vars, int line_no) {
    std::string body = trim(text);
    if (body.empty()) {
        throw ParseError("malformed monomial: empty", line_no);
    }
    std::vector<int64_t> exps(static_cast<size_t>(vars.ambient()), 0);
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t star = body.find('*', pos);
        std::string factor = trim(body.substr(pos, star == std::string::npos ? star : star - pos));
        if (factor.empty()) {
            throw ParseError("malformed monomial '" + body + "'", line_no);
        }
        if (factor != "1") {
            std::string name = factor;
            int64_t exp = 1;
            size_t caret = factor.find('^');
            if (caret != std::string::npos) {
                name = trim(factor.substr(0, caret));
                std::string power = trim(factor.substr(caret + 1));
                if (power.empty() || power.find('^') != std::string::npos) {
                    throw ParseError("malformed monomial '" + body + "'", line_no);
                }
                exp = parse_int(power, line_no);
                if (exp <= 0) {
                    throw ParseError("exponent must be positive in '" + factor + "'", line_no);
                }
            }
            if (!valid_name(name)) {
                throw ParseError("malformed monomial '" + body + "'", line_no);
            }
            std::optional<VarIndex> v = vars.index(name);
            if (!v.has_value()) {
                throw ParseError("unknown variable '" + name + "'", line_no);
            }
            exps[static_cast<size_t>(*v - 1)] = checked_add(exps[static_cast<size_t>(*v - 1)], exp);
        }
        if (star == std::string::npos) {
            break;
        }
        pos = star + 1;
    }
    return Monomial::from_dense(exps);
}

Binomial parse_binomial(const std::string& text, const VarTable& vars, const MonomialOrder& ord,
                        int line_no) {
    size_t dash = text.find('-');
    if (dash == std::string::npos || text.find('-', dash + 1) != std::string::npos) {
        throw ParseError("expected '<monomial> - <monomial>'", line_no);
    }
    Monomial a = parse_monomial(text.substr(0, dash), vars, line_no);
    Monomial b = parse_monomial(text.substr(dash + 1), vars, line_no);
    std::optional<Binomial> f = Binomial::orient(a, b, ord);
    if (!f.has_value()) {
        throw ParseError("zero binomial", line_no);
    }
    return *f;
}

IdealFile parse_ideal(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    VarTable vars;
    std::optional<MonomialOrder> ord;
    std::vector<Binomial> gens;
    enum class Stage { Vars, Order, Gens } stage = Stage::Vars;

    while (std::getline(in, line)) {
        ++line_no;
        std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        switch (stage) {
            case Stage::Vars: {
                if (body.rfind("vars:", 0) != 0) {
                    throw ParseError("expected 'vars:' line", line_no);
                }
                std::vector<std::string> names = split_ws(body.substr(5));
                if (names.empty()) {
                    throw ParseError("no variables declared", line_no);
                }
                for (const std::string& name : names) {
                    if (!valid_name(name)) {
                        throw ParseError("bad variable name '" + name + "'", line_no);
                    }
                    if (vars.index(name).has_value()) {
                        throw ParseError("duplicate variable '" + name + "'", line_no);
                    }
                    vars.names.push_back(name);
                }
                stage = Stage::Order;
                break;
            }
            case Stage::Order: {
                if (body.rfind("order:", 0) != 0) {
                    throw ParseError("expected 'order:' line", line_no);
                }
                std::vector<std::string> toks = split_ws(body.substr(6));
                if (toks.empty()) {
                    throw ParseError("missing order name", line_no);
                }
                int n = vars.ambient();
                if (toks[0] == "lex" && toks.size() == 1) {
                    ord = MonomialOrder::lex(n);
                } else if (toks[0] == "degrevlex" && toks.size() == 1) {
                    ord = MonomialOrder::degrevlex(n);
                } else if (toks[0] == "weight") {
                    if (static_cast<int>(toks.size()) != n + 1) {
                        throw ParseError("weight order needs one coefficient per variable",
                                         line_no);
                    }
                    std::vector<int64_t> c;
                    for (size_t i = 1; i < toks.size(); ++i) {
                        c.push_back(parse_int(toks[i], line_no));
                    }
                    try {
                        ord = MonomialOrder::weight(c);
                    } catch (const InputError& e) {
                        throw ParseError(e.what(), line_no);
                    }
                } else {
                    throw ParseError("unknown order '" + toks[0] + "'", line_no);
                }
                stage = Stage::Gens;
                break;
            }
            case Stage::Gens: {
                gens.push_back(parse_binomial(body, vars, *ord, line_no));
                break;
            }
        }
    }
    if (stage == Stage::Vars) {
        throw ParseError("expected 'vars:' line", line_no + 1);
    }
    if (stage == Stage::Order) {
        throw ParseError("expected 'order:' line", line_no + 1);
    }
    if (gens.empty()) {
        throw ParseError("no generators", line_no + 1);
    }
    return IdealFile{std::move(vars), std::move(*ord), std::move(gens)};
}

namespace {

IpFile parse_matrix_lines(const std::string& text, bool allow_vectors) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    size_t rows = 0;
    size_t cols = 0;
    bool have_header = false;
    IpFile out;
    size_t filled = 0;
    std::vector<std::vector<int64_t>> extras;

    while (std::getline(in, line)) {
        ++line_no;
        std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        std::vector<std::string> toks = split_ws(body);
        if (!have_header) {
            if (toks.size() != 2) {
                throw ParseError("expected matrix header 'm n'", line_no);
            }
            int64_t m = parse_int(toks[0], line_no);
            int64_t n = parse_int(toks[1], line_no);
            if (m <= 0 || n <= 0) {
                throw ParseError("matrix dimensions must be positive", line_no);
            }
            rows = static_cast<size_t>(m);
            cols = static_cast<size_t>(n);
            out.A = Matrix(rows, cols);
            have_header = true;
            continue;
        }
        if (filled < rows) {
            if (toks.size() != cols) {
                throw ParseError("expected " + std::to_string(cols) + " entries in matrix row",
                                 line_no);
            }
            for (size_t j = 0; j < cols; ++j) {
                out.A.at(filled, j) = parse_int(toks[j], line_no);
            }
            ++filled;
            continue;
        }
        if (!allow_vectors || extras.size() == 3) {
            throw ParseError("unexpected line after matrix rows", line_no);
        }
        std::vector<int64_t> v;
        for (const std::string& tok : toks) {
            v.push_back(parse_int(tok, line_no));
        }
        extras.push_back(std::move(v));
    }
    if (!have_header) {
        throw ParseError("expected matrix header 'm n'", line_no + 1);
    }
    if (filled != rows) {
        throw ParseError("matrix has " + std::to_string(filled) + " of " + std::to_string(rows) +
                             " rows",
                         line_no + 1);
    }
    if (!extras.empty()) {
        if (extras.size() != 3) {
            throw ParseError("expected three vector lines (b, c, x0) after the matrix",
                             line_no + 1);
        }
        out.b = std::move(extras[0]);
        out.c = std::move(extras[1]);
        out.x0 = std::move(extras[2]);
    }
    return out;
}

}  // namespace

Matrix parse_matrix(const std::string& text) {
    return parse_matrix_lines(text, false).A;
}

IpFile parse_ip_file(const std::string& text) {
    return parse_matrix_lines(text, true);
}

std::vector<int64_t> parse_int_vector(const std::string& text) {
    std::vector<int64_t> out;
    for (const std::string& tok : split_ws(text)) {
        int64_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw InputError("malformed integer '" + tok + "'");
        }
        out.push_back(value);
    }
    return out;
}

}  // namespace janet
