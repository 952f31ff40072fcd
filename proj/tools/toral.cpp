// Command-line front end: exact invariants of hyperbolic toral
// automorphisms on file-supplied matrices, with JSON or table output.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "toral/io.hpp"

using namespace toral;
using nlohmann::json;

namespace {

struct Options {
    std::string file_a, file_b, file_c;
    std::string poly_text, chain_text = "1,2,4";
    unsigned k = 1;
    unsigned max_k = 12;
    unsigned k_max = 24;
    long d = 2;
    long d_max = 30;
    long bound = 10;
    long cap = 10000;
    long points_cap = 1000000;
    std::string level = "module";
    bool as_json = false;
};

void emit(const Options& opt, const std::string& verb, const json& result,
          const std::string& table) {
    if (opt.as_json) {
        json out{{"schema", "toral/1"}, {"verb", verb}, {"result", result}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << table;
    }
}

std::string yesno(bool b) { return b ? "true" : "false"; }

std::string factors_str(const InvariantFactors& f) {
    if (f.divisors.empty())
        return "trivial";
    std::string s = "[";
    for (std::size_t i = 0; i < f.divisors.size(); i++) {
        if (i)
            s += ", ";
        s += f.divisors[i].get_str();
    }
    return s + "]";
}

int run(const Options& opt, const std::string& verb) {
    if (verb == "hyperbolic") {
        IntMatrix A = load_matrix(opt.file_a);
        bool h = is_hyperbolic(A);
        emit(opt, verb, json{{"hyperbolic", h}},
             std::string("hyperbolic: ") + yesno(h) + "\n");
        return 0;
    }
    if (verb == "charpoly") {
        IntMatrix A = load_matrix(opt.file_a);
        PolyZ f = charpoly(A);
        json coeffs = json::array();
        for (const Int& c : f.coeffs())
            coeffs.push_back(c.get_str());
        emit(opt, verb, json{{"charpoly", f.str()}, {"coeffs", coeffs}},
             "charpoly: " + f.str() + "\n");
        return 0;
    }
    if (verb == "snf") {
        IntMatrix A = load_matrix(opt.file_a);
        SNFDecomposition s = snf(A);
        emit(opt, verb,
             json{{"U", matrix_json(s.U)}, {"D", matrix_json(s.D)},
                  {"V", matrix_json(s.V)}},
             "D:\n" + s.D.str() + "U:\n" + s.U.str() + "V:\n" + s.V.str());
        return 0;
    }
    if (verb == "similar") {
        IntMatrix A = load_matrix(opt.file_a);
        IntMatrix B = load_matrix(opt.file_b);
        bool s = similar_over_Q(A, B);
        emit(opt, verb, json{{"similar_over_Q", s}},
             std::string("similar over Q: ") + yesno(s) + "\n");
        return 0;
    }
    if (verb == "bf") {
        IntMatrix A = load_matrix(opt.file_a);
        BFGroup G = opt.poly_text.empty() ? bf_k(A, opt.k)
                                          : bf_group(A, parse_poly(opt.poly_text));
        emit(opt, verb, bf_group_json(G),
             "factors: " + factors_str(G.factors()) +
                 "\norder: " + G.order().get_str() + "\n");
        return 0;
    }
    if (verb == "per") {
        IntMatrix A = load_matrix(opt.file_a);
        Int c = per_count(A, opt.k);
        emit(opt, verb, json{{"k", opt.k}, {"count", c.get_str()}},
             "periodic points at k=" + std::to_string(opt.k) + ": " + c.get_str() +
                 "\n");
        return 0;
    }
    if (verb == "points") {
        IntMatrix A = load_matrix(opt.file_a);
        PeriodicPoints pts = enumerate_periodic_points(A, opt.k, Int(opt.points_cap));
        std::string table = "count: " + std::to_string(pts.nums.size()) + "\n";
        for (const IntVector& num : pts.nums) {
            for (std::size_t i = 0; i < num.size(); i++)
                table += (i ? " " : "") + num[i].get_str() + "/" + pts.den.get_str();
            table += "\n";
        }
        emit(opt, verb, points_json(pts), table);
        return 0;
    }
    if (verb == "strong-bf") {
        IntMatrix A = load_matrix(opt.file_a);
        IntMatrix B = load_matrix(opt.file_b);
        BFLevelKind lv = opt.level == "group" ? BFLevelKind::group : BFLevelKind::module;
        StrongBFReport rep = strong_bf_equivalent(A, B, opt.max_k, lv, Int(opt.cap));
        std::string table;
        for (const StrongBFLevel& l : rep.levels) {
            table += "k=" + std::to_string(l.k) + "  A: " + factors_str(l.factors_a) +
                     "  B: " + factors_str(l.factors_b) +
                     "  group: " + yesno(l.group_ok);
            if (lv == BFLevelKind::module)
                table += std::string("  module: ") + tri_str(l.module);
            table += "\n";
        }
        table += std::string("overall: ") +
                 (rep.overall == StrongBFReport::Overall::consistent
                      ? "consistent up to max_k"
                      : rep.overall == StrongBFReport::Overall::refuted
                            ? "refuted at k=" + std::to_string(rep.decisive_k)
                            : "undecided at k=" + std::to_string(rep.decisive_k)) +
                 "\n";
        emit(opt, verb, strong_bf_json(rep), table);
        return 0;
    }
    if (verb == "ideal") {
        IntMatrix A = load_matrix(opt.file_a);
        FractionalIdeal I = FractionalIdeal::from_matrix(A);
        emit(opt, verb, ideal_json(I),
             "f: " + I.f().str() + "\nden: " + I.den().get_str() + "\nbasis:\n" +
                 I.basis().str());
        return 0;
    }
    if (verb == "weak-equiv" || verb == "ideal-equiv") {
        IntMatrix A = load_matrix(opt.file_a);
        IntMatrix B = load_matrix(opt.file_b);
        FractionalIdeal IA = FractionalIdeal::from_matrix(A);
        FractionalIdeal IB = FractionalIdeal::from_matrix(B);
        IdealVerdict v = verb == "weak-equiv" ? weakly_equivalent(IA, IB)
                                              : ideal_equivalent(IA, IB, Int(opt.bound));
        json res = ideal_verdict_json(v);
        std::string rel = res["relation"].get<std::string>();
        emit(opt, verb, res,
             "relation: " + rel +
                 (v.search_bound_reached ? " (search bound reached)" : "") + "\n");
        return 0;
    }
    if (verb == "cyclic") {
        IntMatrix A = load_matrix(opt.file_a);
        CyclicResult direct = is_cyclic_direct(A, Int(opt.bound));
        json res{{"direct", direct.found ? "yes" : "not_found"}};
        std::string table = std::string("direct search: ") +
                            (direct.found ? "yes" : "not found within bound") + "\n";
        if (direct.found) {
            res["xi"] = json::array();
            std::string xs;
            for (const Int& x : direct.xi) {
                res["xi"].push_back(x.get_str());
                xs += (xs.empty() ? "" : ", ") + x.get_str();
            }
            table += "generator: (" + xs + ")\n";
        }
        if (is_irreducible(charpoly(A))) {
            CyclicIdealResult via = is_cyclic_via_ideal(A, Int(opt.bound));
            res["via_ideal"] = via.verdict == Tri::yes ? "yes" : "not_found";
            table += std::string("via ideal class: ") +
                     (via.verdict == Tri::yes ? "yes" : "not found within bound") + "\n";
        } else {
            res["via_ideal"] = "skipped_reducible";
            table += "via ideal class: skipped (reducible characteristic polynomial)\n";
        }
        emit(opt, verb, res, table);
        return 0;
    }
    if (verb == "conjugate") {
        IntMatrix A = load_matrix(opt.file_a);
        IntMatrix B = load_matrix(opt.file_b);
        ConjugacyResult r = conjugate_over_Z(A, B, Int(opt.bound));
        json res{{"status", r.status == ConjugacyResult::Status::yes
                                ? "yes"
                                : r.status == ConjugacyResult::Status::no ? "no"
                                                                          : "not_found"},
                 {"reason", r.reason}};
        std::string table = "conjugate over Z: " + res["status"].get<std::string>() +
                            "\nreason: " + r.reason + "\n";
        if (r.C) {
            res["C"] = matrix_json(*r.C);
            table += "C:\n" + r.C->str();
        }
        emit(opt, verb, res, table);
        return 0;
    }
    if (verb == "chain-report") {
        IntMatrix A = load_matrix(opt.file_a);
        IntMatrix B = load_matrix(opt.file_b);
        ChainReport rep = equivalence_chain_report(A, B, opt.max_k, Int(opt.cap));
        std::string table =
            "(a) ideals weakly equivalent:      " + yesno(rep.weak_equivalent) +
            "\n(b) block conjugate:               " + yesno(rep.block_conjugate) +
            "\n(c) profinitely conjugate:         " + yesno(rep.profinitely_conjugate) +
            "\n(d) strongly BF-equivalent:        " + yesno(rep.strongly_bf_equivalent) +
            "\n";
        emit(opt, verb, chain_report_json(rep), table);
        return 0;
    }
    if (verb == "tower") {
        IntMatrix A = load_matrix(opt.file_a);
        Tower T = Tower::build(A, parse_chain(opt.chain_text));
        std::string table;
        for (unsigned k : T.chain().levels)
            table += "k=" + std::to_string(k) +
                     "  order: " + T.level(k).order().get_str() +
                     "  factors: " + factors_str(T.level(k).factors()) + "\n";
        emit(opt, verb, tower_json(T), table);
        return 0;
    }
    if (verb == "order-mod") {
        IntMatrix A = load_matrix(opt.file_a);
        unsigned k = order_mod(A, Int(opt.d));
        emit(opt, verb, json{{"d", opt.d}, {"k", k}},
             "order of A mod " + std::to_string(opt.d) + ": " + std::to_string(k) +
                 "\n");
        return 0;
    }
    if (verb == "cofinality") {
        IntMatrix A = load_matrix(opt.file_a);
        CofinalityReport rep = cofinality_check(A, Int(opt.d_max), opt.k_max);
        std::string table;
        for (const CofinalityEntry& e : rep.entries)
            table += "d=" + e.d.get_str() + "  k=" + std::to_string(e.k) +
                     "  contained: " + yesno(e.contained) + "\n";
        table += std::string("all containments: ") + yesno(rep.all_contained) + "\n";
        emit(opt, verb, cofinality_json(rep), table);
        return 0;
    }
    if (verb == "induced-psi") {
        IntMatrix A = load_matrix(opt.file_a);
        IntMatrix B = load_matrix(opt.file_b);
        IntMatrix C = load_matrix(opt.file_c);
        TruncatedConjugacy tc =
            induced_conjugacy(C, A, B, parse_chain(opt.chain_text), Int(opt.cap));
        std::string table = std::string("all checks: ") + yesno(tc.all_ok) + "\n";
        emit(opt, verb, truncated_conjugacy_json(tc), table);
        return 0;
    }
    throw error("unknown verb: " + verb);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of hyperbolic toral automorphisms"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_b, bool needs_c = false) {
        sub->add_option("-A", opt.file_a, "matrix file for A")->required();
        if (needs_b)
            sub->add_option("-B", opt.file_b, "matrix file for B")->required();
        if (needs_c)
            sub->add_option("-C", opt.file_c, "matrix file for the conjugator")
                ->required();
        sub->add_flag("--json", opt.as_json, "machine-readable JSON report");
    };

    CLI::App* s;
    s = app.add_subcommand("hyperbolic", "decide hyperbolicity (no unit-modulus eigenvalue)");
    add_common(s, false);
    s = app.add_subcommand("charpoly", "characteristic polynomial");
    add_common(s, false);
    s = app.add_subcommand("snf", "Smith normal form with transforms");
    add_common(s, false);
    s = app.add_subcommand("similar", "similarity over Q");
    add_common(s, true);
    s = app.add_subcommand("bf", "Bowen-Franks group BF_g(A) or BF_k(A)");
    add_common(s, false);
    s->add_option("-k", opt.k, "level k for g_k(t) = t^k - 1");
    s->add_option("-g", opt.poly_text,
                  "polynomial g: coefficient list or poly:t^2-3t+1");
    s = app.add_subcommand("per", "number of k-periodic points");
    add_common(s, false);
    s->add_option("-k", opt.k, "period")->required();
    s = app.add_subcommand("points", "enumerate the k-periodic points");
    add_common(s, false);
    s->add_option("-k", opt.k, "period")->required();
    s->add_option("--cap", opt.points_cap, "enumeration cap");
    s = app.add_subcommand("strong-bf", "per-k BF comparison of A and B");
    add_common(s, true);
    s->add_option("--max-k", opt.max_k, "test k = 1..max_k (default 12)");
    s->add_option("--level", opt.level, "group or module (default module)")
        ->check(CLI::IsMember({"group", "module"}));
    s->add_option("--cap", opt.cap, "module search cap on |G| (default 10000)");
    s = app.add_subcommand("ideal", "ideal of a right eigenvector (irreducible case)");
    add_common(s, false);
    s = app.add_subcommand("weak-equiv", "weak equivalence of the two eigenvector ideals");
    add_common(s, true);
    s = app.add_subcommand("ideal-equiv",
                           "arithmetic-equivalence search for the eigenvector ideals");
    add_common(s, true);
    s->add_option("--bound", opt.bound, "coefficient search bound (default 10)");
    s = app.add_subcommand("cyclic", "cyclicity: direct generator search and ideal route");
    add_common(s, false);
    s->add_option("--bound", opt.bound, "search bound (default 10)");
    s = app.add_subcommand("conjugate", "search a conjugator over Z");
    add_common(s, true);
    s->add_option("--bound", opt.bound, "search bound (default 10)");
    s = app.add_subcommand("chain-report",
                           "the four equivalent statements for an irreducible pair");
    add_common(s, true);
    s->add_option("--max-k", opt.max_k, "BF cross-check depth (default 12)");
    s->add_option("--cap", opt.cap, "module search cap (default 10000)");
    s = app.add_subcommand("tower", "quotient tower over a divisor chain");
    add_common(s, false);
    s->add_option("--chain", opt.chain_text, "divisor chain, e.g. 1,2,4");
    s = app.add_subcommand("order-mod", "least k with A^k = I mod d");
    add_common(s, false);
    s->add_option("-d", opt.d, "modulus")->required();
    s = app.add_subcommand("cofinality", "containment checks N_k vs dZ^n and products");
    add_common(s, false);
    s->add_option("--dmax", opt.d_max, "check d = 1..dmax (default 30)");
    s->add_option("--kmax", opt.k_max, "product checks k1*k2 <= kmax (default 24)");
    s = app.add_subcommand("induced-psi",
                           "verify the conjugacy-induced maps on a tower");
    add_common(s, true, true);
    s->add_option("--chain", opt.chain_text, "divisor chain, e.g. 1,2,4");
    s->add_option("--cap", opt.cap, "exhaustive-verification cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    std::string verb = app.get_subcommands().front()->get_name();
    try {
        return run(opt, verb);
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << " [violated hypothesis: " << e.hypothesis
                  << "]\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
