#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "janet/completion.hpp"
#include "janet/errors.hpp"
#include "janet/groebner.hpp"
#include "janet/io.hpp"
#include "janet/janet_tree.hpp"
#include "janet/toric.hpp"

namespace {

using namespace janet;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_descending(const std::vector<Binomial>& basis, const MonomialOrder& ord,
                      const std::vector<std::string>& names) {
    std::vector<const Binomial*> ptrs;
    ptrs.reserve(basis.size());
    for (const Binomial& f : basis) {
        ptrs.push_back(&f);
    }
    std::sort(ptrs.begin(), ptrs.end(),
              [&](const Binomial* a, const Binomial* b) { return ord.greater(a->lead(), b->lead()); });
    for (const Binomial* f : ptrs) {
        std::cout << to_text(*f, names) << "\n";
    }
}

int cmd_basis(const std::string& path, bool count_only) {
    IdealFile ideal = parse_ideal(read_file(path));
    std::vector<Binomial> basis = binomial_janet_basis(ideal.generators, ideal.order);
    if (count_only) {
        std::cout << basis.size() << "\n";
    } else {
        print_descending(basis, ideal.order, ideal.vars.names);
    }
    return 0;
}

int cmd_gb(const std::string& path, bool count_only, bool use_buchberger) {
    IdealFile ideal = parse_ideal(read_file(path));
    std::vector<Binomial> gb;
    if (use_buchberger) {
        gb = autoreduce(buchberger(ideal.generators, ideal.order), ideal.order);
    } else {
        gb = autoreduce(binomial_janet_basis(ideal.generators, ideal.order), ideal.order);
    }
    if (count_only) {
        std::cout << gb.size() << "\n";
    } else {
        print_descending(gb, ideal.order, ideal.vars.names);
    }
    return 0;
}

std::vector<int64_t> vector_arg(const std::optional<std::vector<int64_t>>& from_file,
                                const std::string& flag_value, const char* name) {
    if (!flag_value.empty()) {
        if (from_file.has_value()) {
            throw InputError(std::string(name) + " given both in the matrix file and as a flag");
        }
        return parse_int_vector(flag_value);
    }
    if (!from_file.has_value()) {
        throw InputError(std::string(name) + " not given (matrix file line or flag)");
    }
    return *from_file;
}

int cmd_ip(const std::string& path, const std::string& b_flag, const std::string& c_flag,
           const std::string& x0_flag) {
    IpFile file = parse_ip_file(read_file(path));
    std::vector<int64_t> b = vector_arg(file.b, b_flag, "b");
    std::vector<int64_t> c = vector_arg(file.c, c_flag, "c");
    std::vector<int64_t> x0 = vector_arg(file.x0, x0_flag, "x0");
    ToricInstance inst(std::move(file.A), std::move(b), std::move(c), std::move(x0));
    std::vector<int64_t> x = ip_solve(inst);
    int64_t value = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        value = checked_add(value, checked_mul(inst.c[i], x[i]));
    }
    std::cout << "x:";
    for (int64_t xi : x) {
        std::cout << " " << xi;
    }
    std::cout << "\n" << "value: " << value << "\n";
    return 0;
}

std::vector<int> parse_sweep(const std::string& text, const char* name) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 1 || v > 64) {
                throw std::invalid_argument(tok);
            }
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError(std::string("bad ") + name + " sweep value '" + tok + "'");
        }
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

// Random monomial with support inside a sparse variable subset. Queries use
// exactly d, the degree the visit bound n + deg(w) + 1 depends on; set
// members draw a total degree in [1, 2d] so small (n, d) cells still offer
// enough distinct monomials to fill a set.
Monomial random_monomial(std::mt19937_64& rng, int n, int d, double sparsity, bool exact_degree) {
    int support = std::max(1, static_cast<int>(std::lround(sparsity * n)));
    std::vector<int> vars(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        vars[static_cast<size_t>(i)] = i;
    }
    std::shuffle(vars.begin(), vars.end(), rng);
    vars.resize(static_cast<size_t>(support));
    int total = exact_degree ? d : std::uniform_int_distribution<int>(1, 2 * d)(rng);
    std::vector<int64_t> exps(static_cast<size_t>(n), 0);
    std::uniform_int_distribution<size_t> pick(0, vars.size() - 1);
    for (int t = 0; t < total; ++t) {
        ++exps[static_cast<size_t>(vars[pick(rng)])];
    }
    return Monomial::from_dense(exps);
}

struct NaiveScan {
    std::vector<Monomial> members;
    std::vector<uint64_t> nm_masks;

    explicit NaiveScan(const std::vector<Monomial>& U) : members(U) {
        nm_masks.assign(U.size(), 0);
        std::vector<std::vector<VarIndex>> nm = nm_vars(U);
        for (size_t i = 0; i < U.size(); ++i) {
            for (VarIndex v : nm[i]) {
                nm_masks[i] |= uint64_t{1} << (v - 1);
            }
        }
    }

    std::optional<size_t> find(const Monomial& w, int& visits) const {
        for (size_t i = 0; i < members.size(); ++i) {
            ++visits;
            if (janet_divides(i, w)) {
                return i;
            }
        }
        return std::nullopt;
    }

    bool janet_divides(size_t i, const Monomial& w) const {
        const Monomial& u = members[i];
        if (!divides(u, w)) {
            return false;
        }
        for (const VarDeg& e : w.entries()) {
            if (e.deg != u.deg(e.var) && ((nm_masks[i] >> (e.var - 1)) & 1) != 0) {
                return false;
            }
        }
        return true;
    }
};

int cmd_bench(const std::string& n_sweep, const std::string& d_sweep, int set_size, int sets,
              int queries, double sparsity, uint64_t seed) {
    if (set_size < 1 || sets < 1 || queries < 1) {
        throw InputError("set size, set count and query count must be positive");
    }
    if (!(sparsity > 0.0) || sparsity > 1.0) {
        throw InputError("sparsity must be in (0, 1]");
    }
    std::vector<int> ns = parse_sweep(n_sweep, "n");
    std::vector<int> ds = parse_sweep(d_sweep, "d");

    std::mt19937_64 rng(seed);
    std::cout << "n,d,set_size,structure,mean_visits,mean_time_ns\n";
    for (int n : ns) {
        for (int d : ds) {
            double tree_visits = 0.0;
            double naive_visits = 0.0;
            double tree_ns = 0.0;
            double naive_ns = 0.0;
            size_t total_queries = 0;
            for (int s = 0; s < sets; ++s) {
                std::set<std::vector<int64_t>> seen;
                std::vector<Monomial> U;
                size_t attempts = 0;
                while (static_cast<int>(U.size()) < set_size) {
                    if (++attempts > 200 * static_cast<size_t>(set_size)) {
                        throw Error("bench: monomial space too small for the requested set size");
                    }
                    Monomial u = random_monomial(rng, n, d, sparsity, false);
                    if (seen.insert(u.dense()).second) {
                        U.push_back(u);
                    }
                }
                JanetTree tree(n);
                for (size_t i = 0; i < U.size(); ++i) {
                    tree.insert(U[i], i);
                }
                NaiveScan naive(U);
                std::vector<Monomial> W;
                W.reserve(static_cast<size_t>(queries));
                for (int q = 0; q < queries; ++q) {
                    W.push_back(random_monomial(rng, n, d, sparsity, true));
                }
                total_queries += W.size();

                auto t0 = std::chrono::steady_clock::now();
                long long visits = 0;
                for (const Monomial& w : W) {
                    int v = 0;
                    tree.find_with_visits(w, v);
                    visits += v;
                }
                auto t1 = std::chrono::steady_clock::now();
                tree_visits += static_cast<double>(visits);
                tree_ns += std::chrono::duration<double, std::nano>(t1 - t0).count();

                t0 = std::chrono::steady_clock::now();
                visits = 0;
                for (const Monomial& w : W) {
                    int v = 0;
                    naive.find(w, v);
                    visits += v;
                }
                t1 = std::chrono::steady_clock::now();
                naive_visits += static_cast<double>(visits);
                naive_ns += std::chrono::duration<double, std::nano>(t1 - t0).count();
            }
            double k = static_cast<double>(total_queries);
            char row[160];
            std::snprintf(row, sizeof row, "%d,%d,%d,tree,%.2f,%.1f\n", n, d, set_size,
                          tree_visits / k, tree_ns / k);
            std::cout << row;
            std::snprintf(row, sizeof row, "%d,%d,%d,naive,%.2f,%.1f\n", n, d, set_size,
                          naive_visits / k, naive_ns / k);
            std::cout << row;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Janet bases of binomial ideals: basis completion, reduced Groebner "
                 "bases, integer programming, divisor-lookup benchmarks"};
    app.require_subcommand(1);

    std::string path;
    bool count_only = false;
    bool use_buchberger = false;
    std::string b_flag;
    std::string c_flag;
    std::string x0_flag;
    std::string n_sweep = "4,8,16,32";
    std::string d_sweep = "4,8,16,32";
    int set_size = 64;
    int sets = 3;
    int queries = 256;
    double sparsity = 0.4;
    uint64_t seed = 12345;

    CLI::App* basis = app.add_subcommand("basis", "Minimal Janet basis, descending by leading monomial");
    basis->add_option("file", path, "ideal file")->required();
    basis->add_flag("--count", count_only, "print only the cardinality");

    CLI::App* gb = app.add_subcommand("gb", "Reduced Groebner basis (Janet basis + autoreduction)");
    gb->add_option("file", path, "ideal file")->required();
    gb->add_flag("--count", count_only, "print only the cardinality");
    gb->add_flag("--buchberger", use_buchberger, "use the Buchberger path instead");

    CLI::App* ip = app.add_subcommand("ip", "Solve min c.x s.t. A x = b, x >= 0 integer");
    ip->add_option("matrix", path, "matrix file: 'm n' header, m rows; optionally b, c, x0 lines")
        ->required();
    ip->add_option("--b", b_flag, "right-hand side, whitespace-separated integers");
    ip->add_option("--c", c_flag, "cost vector, whitespace-separated integers");
    ip->add_option("--x0", x0_flag, "feasible point, whitespace-separated integers");

    CLI::App* bench = app.add_subcommand("bench", "Divisor-lookup benchmark CSV: tree vs naive scan");
    bench->add_option("--n", n_sweep, "comma-separated variable counts (default 4,8,16,32)");
    bench->add_option("--d", d_sweep, "comma-separated query degrees (default 4,8,16,32)");
    bench->add_option("--set-size", set_size, "monomials per set (default 64)");
    bench->add_option("--sets", sets, "sets per (n, d) cell (default 3)");
    bench->add_option("--queries", queries, "queries per set (default 256)");
    bench->add_option("--sparsity", sparsity, "fraction of variables in a support (default 0.4)");
    bench->add_option("--seed", seed, "RNG seed (default 12345)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(basis)) {
            return cmd_basis(path, count_only);
        }
        if (app.got_subcommand(gb)) {
            return cmd_gb(path, count_only, use_buchberger);
        }
        if (app.got_subcommand(ip)) {
            return cmd_ip(path, b_flag, c_flag, x0_flag);
        }
        return cmd_bench(n_sweep, d_sweep, set_size, sets, queries, sparsity, seed);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
