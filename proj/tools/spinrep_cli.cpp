#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinrep/branching.hpp"
#include "spinrep/center.hpp"
#include "spinrep/io.hpp"
#include "spinrep/rep.hpp"

namespace {

using namespace spinrep;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CLI::ValidationError("--output", "cannot open '" + path + "'");
    out << text;
}

std::string vec_str(const ContentVector& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

StrictPartition parse_shape(const std::string& text) {
    try {
        return StrictPartition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--shape", e.what());
    }
}

int cmd_tableaux(const std::string& shape_text, const std::string& format) {
    const StrictPartition shape = parse_shape(shape_text);
    const auto tabs = standard_shifted_tableaux(shape);
    if (format == "json") {
        json doc = json::array();
        for (const auto& t : tabs)
            doc.push_back({{"rows", tableau_json(t)}, {"content", content_vector(t)}});
        std::cout << doc.dump(2) << '\n';
        return kExitOk;
    }
    std::printf("shape %s: %zu standard shifted tableaux\n", shape.str().c_str(), tabs.size());
    for (const auto& t : tabs) {
        std::fputs(tableau_text(t).c_str(), stdout);
        std::printf("content %s\n\n", vec_str(content_vector(t)).c_str());
    }
    return kExitOk;
}

int cmd_spectrum(const std::string& shape_text, const std::string& format) {
    const StrictPartition shape = parse_shape(shape_text);
    const auto vectors = scont(shape);
    const int r = shape.n() - shape.length();
    const long long bd = 1LL << ((r + 1) / 2);
    if (format == "json") {
        json doc;
        doc["shape"] = shape.str();
        doc["n"] = shape.n();
        doc["block_dim"] = bd;
        doc["blocks"] = json::array();
        doc["jm_squared_spectra"] = json::array();
        for (const auto& b : vectors) {
            doc["blocks"].push_back(b);
            json row = json::array();
            for (int c : b) row.push_back(q_value(c) / 2);
            doc["jm_squared_spectra"].push_back(std::move(row));
        }
        std::cout << doc.dump(2) << '\n';
        return kExitOk;
    }
    std::printf("shape %s  n=%d  blocks=%zu  block_dim=%lld\n", shape.str().c_str(), shape.n(),
                vectors.size(), bd);
    for (const auto& b : vectors) {
        std::string q;
        for (size_t k = 0; k < b.size(); ++k) {
            if (k) q += ',';
            q += std::to_string(q_value(b[k]) / 2);
        }
        std::printf("beta=%s  M^2=(%s)\n", vec_str(b).c_str(), q.c_str());
    }
    return kExitOk;
}

int cmd_rep(const std::string& shape_text, bool compact, const std::string& output) {
    const StrictPartition shape = parse_shape(shape_text);
    const SuperRep rep = build(shape);
    emit(superrep_json(rep, compact).dump(2) + "\n", output);
    return kExitOk;
}

int cmd_verify(int max_n, double tol, const std::string& format) {
    bool all_ok = true;
    json jrows = json::array();
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& lam : enumerate_strict_partitions(n)) {
            const SuperRep rep = build(lam);
            const RelationReport rpt = verify_relations(rep, tol);
            const bool ok = rpt.pass(tol);
            all_ok = all_ok && ok;
            if (format == "json") {
                jrows.push_back({{"lambda", lam.str()},
                                 {"n", n},
                                 {"dim", rep.total_dim},
                                 {"kind", std::string(1, rep.kind)},
                                 {"worst_residual", rpt.worst()},
                                 {"pass", ok}});
            } else {
                std::printf("n=%d lambda=%s dim=%lld kind=%c residual=%.3e %s\n", n,
                            lam.str().c_str(), rep.total_dim, rep.kind, rpt.worst(),
                            ok ? "pass" : "FAIL");
                if (!ok) std::fputs(rpt.summary().c_str(), stdout);
            }
        }
    }
    if (format == "json")
        std::cout << jrows.dump(2) << '\n';
    else
        std::printf("%s (n <= %d, tol %.1e)\n",
                    all_ok ? "all relation suites passed" : "FAILURES", max_n, tol);
    return all_ok ? kExitOk : kExitVerifyFailed;
}

int cmd_branch(int max_n, const std::string& format, const std::string& output) {
    const BranchingGraph g = branching_graph(max_n);
    if (format == "dot") {
        emit(export_dot(g), output);
    } else if (format == "json") {
        emit(export_json(g) + "\n", output);
    } else {
        std::string text;
        for (const auto& e : g.edges)
            text += g.nodes[e.from].shape.str() + " -> " + g.nodes[e.to].shape.str() + "  x" +
                    std::to_string(e.mult) + "\n";
        emit(text, output);
    }
    return kExitOk;
}

int cmd_dims(int n, const std::string& format) {
    long long lhs = 0;
    json jrows = json::array();
    if (format != "json") std::printf("lambda    dim     type\n");
    for (const auto& lam : enumerate_strict_partitions(n)) {
        const long long d = rep_dim(lam);
        const char k = rep_type(lam);
        if (format == "json")
            jrows.push_back({{"lambda", lam.str()}, {"dim", d}, {"kind", std::string(1, k)}});
        else
            std::printf("%-9s %-7lld %c\n", lam.str().c_str(), d, k);
        lhs += (k == 'Q') ? d * d / 2 : d * d;
    }
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    if (format == "json") {
        json doc = {{"rows", jrows},
                    {"sum_d2_halved_for_q", lhs},
                    {"factorial", fact},
                    {"identity", lhs == fact}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::printf("sum d^2 (halved for Q) = %lld, %d! = %lld: %s\n", lhs, n, fact,
                    lhs == fact ? "pass" : "FAIL");
    }
    return lhs == fact ? kExitOk : kExitVerifyFailed;
}

int cmd_vogan(int max_n, int max_m, int products, const std::string& format) {
    bool all_ok = true;
    json jrows = json::array();
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& lam : enumerate_strict_partitions(n)) {
            for (int m = 1; m <= max_m; ++m) {
                const VoganCheck c = vogan_check(lam, {m});
                all_ok = all_ok && c.equal;
                if (format == "json") {
                    jrows.push_back({{"lambda", lam.str()},
                                     {"factors", c.factors},
                                     {"twisted", fraction_json(c.twisted)},
                                     {"hecke", fraction_json(c.hecke)},
                                     {"equal", c.equal}});
                } else {
                    std::printf("lambda=%-9s m=%d  twisted=%s hecke=%s %s\n", lam.str().c_str(),
                                m, c.twisted.str().c_str(), c.hecke.str().c_str(),
                                c.equal ? "pass" : "FAIL");
                }
            }
            if (products > 1) {
                int combos = 0;
                bool ok = true;
                std::vector<int> stack;
                auto rec = [&](auto&& self, int lo, int left) -> void {
                    if (stack.size() > 1) {
                        const VoganCheck c = vogan_check(lam, stack);
                        ++combos;
                        ok = ok && c.equal;
                    }
                    if (left == 0) return;
                    for (int m = lo; m <= max_m; ++m) {
                        stack.push_back(m);
                        self(self, m, left - 1);
                        stack.pop_back();
                    }
                };
                rec(rec, 1, products);
                all_ok = all_ok && ok;
                if (format == "json")
                    jrows.push_back({{"lambda", lam.str()},
                                     {"product_combos", combos},
                                     {"max_factors", products},
                                     {"equal", ok}});
                else
                    std::printf("lambda=%-9s products up to %d factors: %d combos %s\n",
                                lam.str().c_str(), products, combos, ok ? "pass" : "FAIL");
            }
        }
    }
    if (format == "json") std::cout << jrows.dump(2) << '\n';
    return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit supermodules of the twisted symmetric group algebra"};
    app.require_subcommand(1);

    double tol = 1e-9;
    if (const char* env = std::getenv("SPINREP_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end && *end == '\0' && v > 0) tol = v;
    }
    app.add_option("--tol", tol, "residual tolerance for verification")->capture_default_str();

    std::string shape_text, format = "text", output;
    int n = 0, max_m = 3, products = 1;
    bool compact = false;

    auto* t = app.add_subcommand("tableaux", "standard shifted tableaux and content vectors");
    t->add_option("--shape", shape_text, "strict partition, e.g. 3,1")->required();
    t->add_option("--format", format, "text|json");

    auto* s = app.add_subcommand("spectrum", "squared Jucys-Murphy spectrum per block");
    s->add_option("--shape", shape_text)->required();
    s->add_option("--format", format, "text|json");

    auto* r = app.add_subcommand("rep", "assembled supermodule as JSON");
    r->add_option("--shape", shape_text)->required();
    r->add_option("--format", format, "json");
    r->add_flag("--compact", compact, "emit only block data and spectra");
    r->add_option("--output", output, "write to file instead of stdout");

    auto* v = app.add_subcommand("verify", "relation suite over all strict partitions up to n");
    v->add_option("--n", n, "largest rank")->required();
    v->add_option("--format", format, "text|json");

    std::string dot_path;
    auto* b = app.add_subcommand("branch", "branching graph");
    b->add_option("--n", n, "largest rank")->required();
    b->add_option("--format", format, "text|dot|json");
    b->add_option("--output", output, "write to file instead of stdout");
    b->add_option("--dot", dot_path, "shorthand for --format dot --output FILE");

    auto* d = app.add_subcommand("dims", "dimension/type table and the factorial identity");
    d->add_option("--n", n, "rank")->required();
    d->add_option("--format", format, "text|json");

    auto* vg = app.add_subcommand("vogan", "central power-sum identity table");
    vg->add_option("--n", n, "largest rank")->required();
    vg->add_option("--max-m", max_m, "largest power-sum exponent");
    vg->add_option("--products", products, "check products of up to this many factors");
    vg->add_option("--format", format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (t->parsed()) return cmd_tableaux(shape_text, format);
        if (s->parsed()) return cmd_spectrum(shape_text, format);
        if (r->parsed()) return cmd_rep(shape_text, compact, output);
        if (v->parsed()) return cmd_verify(n, tol, format);
        if (b->parsed()) {
            if (!dot_path.empty()) return cmd_branch(n, "dot", dot_path);
            return cmd_branch(n, format, output);
        }
        if (d->parsed()) return cmd_dims(n, format);
        if (vg->parsed()) return cmd_vogan(n, max_m, products, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
