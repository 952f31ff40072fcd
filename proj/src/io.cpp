#include "toral/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace toral {

namespace {

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw parse_error("not an integer: '" + s + "'");
    }
}

json int_json(const Int& x) {
    // exact when it fits, decimal string otherwise
    if (x.fits_slong_p())
        return json(x.get_si());
    return json(x.get_str());
}

json int_vector_json(const IntVector& v) {
    json a = json::array();
    for (const Int& x : v)
        a.push_back(int_json(x));
    return a;
}

Int json_to_int(const json& j) {
    if (j.is_number_integer())
        return Int(j.get<long long>());
    if (j.is_string())
        return parse_int(j.get<std::string>());
    throw parse_error("expected an integer entry");
}

} // namespace

IntMatrix parse_matrix_text(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    if (!(is >> tok))
        throw parse_error("empty matrix file");
    Int nz = parse_int(tok);
    if (nz < 1 || !nz.fits_sint_p())
        throw parse_error("matrix dimension must be a small positive integer");
    std::size_t n = static_cast<std::size_t>(nz.get_si());
    IntMatrix M(n, n);
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++) {
            if (!(is >> tok))
                throw parse_error("matrix file ends early: expected " +
                                  std::to_string(n * n) + " entries");
            M(i, j) = parse_int(tok);
        }
    if (is >> tok)
        throw parse_error("trailing data after matrix entries");
    return M;
}

IntMatrix parse_matrix_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw parse_error("matrix JSON needs fields \"n\" and \"rows\"");
    std::size_t n = j.at("n").get<std::size_t>();
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != n)
        throw parse_error("matrix JSON: \"rows\" must hold n rows");
    IntMatrix M(n, n);
    for (std::size_t i = 0; i < n; i++) {
        const json& r = rows.at(i);
        if (!r.is_array() || r.size() != n)
            throw parse_error("matrix JSON: ragged or non-square rows");
        for (std::size_t k = 0; k < n; k++)
            M(i, k) = json_to_int(r.at(k));
    }
    return M;
}

IntMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open matrix file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos)
        throw parse_error("empty matrix file: " + path);
    if (text[pos] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded())
            throw parse_error("invalid JSON in " + path);
        return parse_matrix_json(j);
    }
    return parse_matrix_text(text);
}

std::string matrix_text(const IntMatrix& M) {
    std::ostringstream os;
    os << M.rows() << "\n" << M.str();
    return os.str();
}

namespace {

// Surface syntax: sum of terms c, c*t^k, t^k, with +-, '*' optional.
PolyZ parse_poly_surface(const std::string& s) {
    std::vector<Int> coeffs;
    auto bump = [&](std::size_t k, const Int& c) {
        if (coeffs.size() <= k)
            coeffs.resize(k + 1, Int(0));
        coeffs[k] += c;
    };
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            i++;
    };
    skip_ws();
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        skip_ws();
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            i++;
        } else if (!first) {
            throw parse_error("expected '+' or '-' between polynomial terms");
        }
        first = false;
        skip_ws();
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            digits += s[i++];
        Int coef = digits.empty() ? Int(1) : parse_int(digits);
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            i++;
            skip_ws();
        }
        std::size_t power = 0;
        if (i < s.size() && (s[i] == 't' || s[i] == 'T')) {
            i++;
            power = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                i++;
                skip_ws();
                std::string ed;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    ed += s[i++];
                if (ed.empty())
                    throw parse_error("missing exponent after '^'");
                power = std::stoul(ed);
            }
        } else if (digits.empty()) {
            throw parse_error("empty polynomial term");
        }
        bump(power, sign * coef);
        skip_ws();
    }
    if (coeffs.empty())
        throw parse_error("empty polynomial");
    return PolyZ(coeffs);
}

} // namespace

PolyZ parse_poly(const std::string& text) {
    if (text.rfind("poly:", 0) == 0)
        return parse_poly_surface(text.substr(5));
    std::istringstream is(text);
    std::vector<Int> coeffs;
    std::string tok;
    while (is >> tok)
        coeffs.push_back(parse_int(tok));
    if (coeffs.empty())
        throw parse_error("empty polynomial");
    return PolyZ(coeffs);
}

DivisorChain parse_chain(const std::string& text) {
    std::vector<unsigned> ks;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        if (cur.empty())
            throw parse_error("empty entry in chain");
        Int v = parse_int(cur);
        if (v < 1 || !v.fits_uint_p())
            throw parse_error("chain levels must be small positive integers");
        ks.push_back(static_cast<unsigned>(v.get_ui()));
    }
    if (ks.empty())
        throw parse_error("empty chain");
    return DivisorChain::of(ks);
}

// ----------------------------------------------------------- emitters

json matrix_json(const IntMatrix& M) {
    json rows = json::array();
    for (std::size_t i = 0; i < M.rows(); i++)
        rows.push_back(int_vector_json(M.row(i)));
    return json{{"n", M.rows()}, {"rows", rows}};
}

json factors_json(const InvariantFactors& f) {
    return int_vector_json(f.divisors);
}

json bf_group_json(const BFGroup& G) {
    return json{
        {"g", G.poly().str()},
        {"g_coeffs", int_vector_json(G.poly().coeffs())},
        {"factors", factors_json(G.factors())},
        {"order", int_json(G.order())},
        {"relations", matrix_json(G.relations().basis())},
        {"action", matrix_json(G.action())},
        {"moduli", int_vector_json(G.moduli())},
    };
}

json points_json(const PeriodicPoints& pts) {
    json arr = json::array();
    for (const IntVector& num : pts.nums) {
        json p = json::array();
        for (const Int& x : num)
            p.push_back(x.get_str() + "/" + pts.den.get_str());
        arr.push_back(p);
    }
    return json{{"count", pts.nums.size()},
                {"denominator", int_json(pts.den)},
                {"points", arr}};
}

json strong_bf_json(const StrongBFReport& rep) {
    json levels = json::array();
    for (const StrongBFLevel& lv : rep.levels) {
        json e{{"k", lv.k},
               {"factors_A", factors_json(lv.factors_a)},
               {"factors_B", factors_json(lv.factors_b)},
               {"group", lv.group_ok}};
        if (rep.level == BFLevelKind::module)
            e["module"] = tri_str(lv.module);
        levels.push_back(e);
    }
    const char* overall = rep.overall == StrongBFReport::Overall::consistent
                              ? "consistent"
                              : rep.overall == StrongBFReport::Overall::refuted
                                    ? "refuted"
                                    : "undecided";
    json out{{"level", rep.level == BFLevelKind::module ? "module" : "group"},
             {"max_k", rep.max_k},
             {"per_k", levels},
             {"overall", overall}};
    if (rep.overall == StrongBFReport::Overall::refuted) {
        out["refuted_at"] = rep.decisive_k;
        out["note"] = "a refutation at one k rules out strong BF-equivalence "
                      "and with it profinite conjugacy";
    } else if (rep.overall == StrongBFReport::Overall::undecided) {
        out["undecided_at"] = rep.decisive_k;
    } else {
        out["note"] = "consistent up to max_k; equivalence itself quantifies "
                      "over all k";
    }
    return out;
}

json order_element_json(const OrderElement& x) {
    return json{{"num", int_vector_json(x.num().coeffs())},
                {"den", int_json(x.den())}};
}

json ideal_json(const FractionalIdeal& I) {
    json basis = json::array();
    for (std::size_t i = 0; i < I.n(); i++)
        basis.push_back(int_vector_json(I.basis().row(i)));
    return json{{"f", int_vector_json(I.f().coeffs())},
                {"den", int_json(I.den())},
                {"basis", basis},
                {"norm", I.norm().get_str()}};
}

json ideal_verdict_json(const IdealVerdict& v) {
    const char* rel = "";
    switch (v.relation) {
    case IdealVerdict::Relation::weak_equivalent:
        rel = "weak_equivalent";
        break;
    case IdealVerdict::Relation::arithmetically_equivalent:
        rel = "arithmetically_equivalent";
        break;
    case IdealVerdict::Relation::principal:
        rel = "principal";
        break;
    default:
        rel = "none_found";
        break;
    }
    json out{{"relation", rel}, {"search_bound_reached", v.search_bound_reached}};
    if (v.witness_xy) {
        out["witness_X"] = ideal_json(v.witness_xy->first);
        out["witness_Y"] = ideal_json(v.witness_xy->second);
    }
    if (v.witness_gamma)
        out["witness_gamma"] = order_element_json(*v.witness_gamma);
    return out;
}

json chain_report_json(const ChainReport& rep) {
    json out{
        {"a_weak_equivalent", rep.weak_equivalent},
        {"b_block_conjugate", rep.block_conjugate},
        {"c_profinitely_conjugate", rep.profinitely_conjugate},
        {"d_strongly_bf_equivalent", rep.strongly_bf_equivalent},
        {"justification",
         "for irreducible similar hyperbolic pairs the four statements are "
         "equivalent; (a) is decided completely by colon closure and "
         "(b), (c), (d) are reported through that equivalence"},
        {"bf_cross_check", strong_bf_json(rep.cross_check)},
    };
    if (rep.witness_xy) {
        out["witness_X"] = ideal_json(rep.witness_xy->first);
        out["witness_Y"] = ideal_json(rep.witness_xy->second);
    }
    return out;
}

json tower_json(const Tower& T) {
    json levels = json::array();
    for (unsigned k : T.chain().levels) {
        const BFGroup& G = T.level(k);
        levels.push_back(json{{"k", k},
                              {"factors", factors_json(G.factors())},
                              {"order", int_json(G.order())},
                              {"action", matrix_json(G.action())}});
    }
    return json{{"levels", levels}};
}

json cofinality_json(const CofinalityReport& rep) {
    json entries = json::array();
    for (const CofinalityEntry& e : rep.entries)
        entries.push_back(json{{"d", int_json(e.d)},
                               {"k", e.k},
                               {"within_k_max", e.within_k_max},
                               {"contained", e.contained}});
    json pairs = json::array();
    for (const CofinalityPair& p : rep.pairs) {
        json e{{"k1", p.k1}, {"k2", p.k2}, {"contained", p.contained},
               {"coprime", p.coprime}};
        if (p.coprime)
            e["equality"] = p.equality;
        pairs.push_back(e);
    }
    return json{{"entries", entries},
                {"products", pairs},
                {"all_contained", rep.all_contained}};
}

json truncated_conjugacy_json(const TruncatedConjugacy& tc) {
    json bits = json::array();
    for (const LevelBits& b : tc.bits)
        bits.push_back(json{{"k", b.k},
                            {"well_defined", b.well_defined},
                            {"intertwines", b.intertwines},
                            {"bijective", b.bijective},
                            {"exhaustive", b.exhaustive}});
    json trans = json::array();
    for (bool b : tc.transition_commutes)
        trans.push_back(b);
    return json{{"H", matrix_json(tc.H)},
                {"levels", bits},
                {"transition_commutes", trans},
                {"all_ok", tc.all_ok}};
}

} // namespace toral
