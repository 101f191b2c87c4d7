#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "tlc/fixtures.hpp"
#include "tlc/io.hpp"
#include "tlc/matrep.hpp"
#include "tlc/verify.hpp"

using namespace tlc;
using nlohmann::json;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << std::endl;
    } else {
        std::ofstream out(path);
        out << j.dump(2) << std::endl;
    }
}

struct TwistSpec {
    TwistKind kind = TwistKind::None;
    std::string arg;
};

TwistSpec parse_twist(const std::string& s) {
    TwistSpec t;
    if (s.empty() || s == "none") return t;
    if (s.rfind("diag:", 0) == 0) {
        t.kind = TwistKind::Diagonal;
        t.arg = s.substr(5);
        return t;
    }
    if (s.rfind("general:", 0) == 0) {
        t.kind = TwistKind::General;
        t.arg = s.substr(8);
        return t;
    }
    throw CLI::ValidationError("--twist", "expected none | diag:t | general:a,b,c,d");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) { out.push_back(cur); cur.clear(); }
        else cur += c;
    }
    out.push_back(cur);
    return out;
}

template <typename Scalar>
ChainParams<Scalar> make_chain(int L, Scalar q, const TwistSpec& tw,
                               Scalar (*parse)(const std::string&)) {
    switch (tw.kind) {
        case TwistKind::None:
            return ChainParams<Scalar>::untwisted(L, q);
        case TwistKind::Diagonal:
            return ChainParams<Scalar>::diagonal(L, q, parse(tw.arg));
        case TwistKind::General: {
            auto parts = split(tw.arg, ',');
            if (parts.size() != 4)
                throw CLI::ValidationError("--twist", "general twist needs 4 entries");
            Eigen::Matrix<Scalar, 2, 2> T;
            T << parse(parts[0]), parse(parts[1]), parse(parts[2]), parse(parts[3]);
            return ChainParams<Scalar>::general(L, q, T);
        }
    }
    throw std::logic_error("unreachable");
}

Rational parse_rat(const std::string& s) { return rational_from_string(s); }
Cplx parse_cplx(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() == 1) return Cplx(std::stod(parts[0]), 0);
    return Cplx(std::stod(parts[0]), std::stod(parts[1]));
}

int diff_one(char series, int k, const ChargeDensity& got, json& out) {
    Fixture fix = load_fixture(series, k);
    DiffReport rep = diff(fix, got);
    json entry;
    entry["series"] = std::string(1, series);
    entry["k"] = k;
    entry["terms"] = got.terms.size();
    entry["match"] = rep.clean();
    if (!rep.clean()) entry["diff"] = rep.str();
    out.push_back(entry);
    return rep.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local conserved charges of the closed XXZ chain in the "
                 "Temperley-Lieb algebra"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "emit a charge density Q_k");
    int gen_k = 4;
    std::string gen_format = "json", gen_out;
    gen->add_option("--k", gen_k, "charge order")->required()->check(CLI::Range(1, 16));
    gen->add_option("--format", gen_format)->check(CLI::IsMember({"json", "csv", "tex"}));
    gen->add_option("--out", gen_out, "output path (default stdout)");
    gen->callback([&] {
        ChargeDensity d = build_charge(gen_k);
        std::string text = gen_format == "json"  ? charge_to_json(d)
                           : gen_format == "csv" ? charge_to_csv(d)
                                                 : charge_to_tex(d);
        if (gen_out.empty())
            std::cout << text;
        else
            std::ofstream(gen_out) << text;
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "conservation checks");
    verify->require_subcommand(1);
    auto* vsym = verify->add_subcommand("symbolic", "[Q_k, H] = 0 in the diagram algebra");
    int vs_k = 4;
    vsym->add_option("--k", vs_k)->required()->check(CLI::Range(1, 12));
    vsym->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        json out;
        out["check"] = "symbolic-commutator";
        out["k"] = vs_k;
        CommutatorDensity cd = commutator_density(vs_k);
        out["residual_terms"] = cd.terms.size();
        out["pass"] = cd.empty();
        out["seconds"] = seconds_since(t0);
        emit(out, "");
        if (!cd.empty()) exit_code = 1;
    });

    auto* vnum = verify->add_subcommand("numeric", "[Q_k, H] on the spin chain");
    int vn_k = 3, vn_L = 8;
    std::string vn_q = "3/2", vn_twist = "none";
    bool vn_exact = false;
    double vn_tol = 1e-10;
    vnum->add_option("--k", vn_k)->required()->check(CLI::Range(1, 8));
    vnum->add_option("--L", vn_L)->required()->check(CLI::Range(4, 16));
    vnum->add_option("--q", vn_q, "rational p/r or complex re,im");
    vnum->add_option("--twist", vn_twist, "none | diag:t | general:a,b,c,d");
    vnum->add_flag("--exact", vn_exact, "exact rational arithmetic");
    vnum->add_option("--tolerance", vn_tol, "relative tolerance (float mode)");
    vnum->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        json out;
        out["check"] = "numeric-commutator";
        out["k"] = vn_k;
        out["L"] = vn_L;
        out["q"] = vn_q;
        out["twist"] = vn_twist;
        TwistSpec tw = parse_twist(vn_twist);
        if (vn_exact) {
            auto p = make_chain<Rational>(vn_L, parse_rat(vn_q), tw, parse_rat);
            auto qk = charge_matrix<Rational>(vn_k, p);
            Rational n2 = commutator_norm_sq(qk, tl_hamiltonian(p));
            out["mode"] = "exact";
            out["commutator_norm_sq"] = to_string(n2);
            out["pass"] = n2 == 0;
        } else {
            auto p = make_chain<Cplx>(vn_L, parse_cplx(vn_q), tw, parse_cplx);
            auto qk = charge_matrix<Cplx>(vn_k, p);
            auto h = tl_hamiltonian(p);
            double rel = std::sqrt(frobenius_sq(SpinOperator<Cplx>(
                             (qk * h - h * qk)))) /
                         (std::sqrt(frobenius_sq(qk)) * std::sqrt(frobenius_sq(h)));
            out["mode"] = "float";
            out["relative_commutator_norm"] = rel;
            out["pass"] = rel < vn_tol;
        }
        out["seconds"] = seconds_since(t0);
        emit(out, "");
        if (!out["pass"].get<bool>()) exit_code = 1;
    });

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "independent construction checks");
    oracle->require_subcommand(1);
    auto* ob = oracle->add_subcommand("boost", "boost recursion vs the G tables");
    int ob_k = 4;
    ob->add_option("--k", ob_k)->required()->check(CLI::Range(2, 7));
    ob->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        auto gs = boost_series(ob_k, 4 * ob_k);
        json out, rows = json::array();
        exit_code |= diff_one('G', ob_k, gs[ob_k - 1], rows);
        out["check"] = "boost-oracle";
        out["results"] = rows;
        out["seconds"] = seconds_since(t0);
        emit(out, "");
    });
    auto* ot = oracle->add_subcommand("transfer", "log-derivative series checks");
    int ot_k = 3;
    ot->add_option("--k", ot_k)->required()->check(CLI::Range(1, 7));
    ot->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        auto at = transfer_series(ot_k, 3 * ot_k + 2);
        json out;
        out["check"] = "transfer-oracle";
        bool ok = at[0].terms.size() == 1 &&
                  at[0].terms.begin()->second == TauPoly(Frac(1));
        out["atilde1_is_density_of_H"] = ok;
        json sizes = json::array();
        for (int j = 1; j <= ot_k; ++j) {
            json row;
            row["k"] = j;
            row["terms"] = at[j - 1].terms.size();
            CommutatorDensity cd = commutator_density(at[j - 1]);
            row["commutes_with_H"] = cd.empty();
            ok = ok && cd.empty();
            sizes.push_back(row);
        }
        out["series"] = sizes;
        out["pass"] = ok;
        out["seconds"] = seconds_since(t0);
        emit(out, "");
        if (!ok) exit_code = 1;
    });
    auto* oa = oracle->add_subcommand("aseries", "symmetrized A series vs the tables");
    int oa_k = 4;
    oa->add_option("--k", oa_k)->required()->check(CLI::Range(2, 7));
    oa->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        auto res = a_series(oa_k, 3 * oa_k + 2);
        json out, rows = json::array();
        exit_code |= diff_one('A', oa_k, res.density, rows);
        out["check"] = "a-series-oracle";
        out["results"] = rows;
        json acoef = json::array();
        for (auto& a : res.a) acoef.push_back(a.str());
        out["a_coefficients"] = acoef;
        out["seconds"] = seconds_since(t0);
        emit(out, "");
    });

    // ---- props ----
    auto* props = app.add_subcommand("props", "structural properties");
    props->require_subcommand(1);
    auto* pt = props->add_subcommand("triangle", "triangle equation of the Z table");
    int pt_maxk = 12;
    pt->add_option("--max-k", pt_maxk)->check(CLI::Range(1, 40));
    pt->callback([&] {
        json out;
        out["check"] = "triangle";
        bool ok = true;
        for (int k = 1; k <= pt_maxk; ++k) ok = ok && triangle_check(k, k + 1);
        out["max_k"] = pt_maxk;
        out["pass"] = ok;
        emit(out, "");
        if (!ok) exit_code = 1;
    });
    auto* pi = props->add_subcommand("identities", "environment-code identities");
    int pi_k = 6;
    pi->add_option("--k", pi_k)->required()->check(CLI::Range(2, 12));
    pi->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        IdentityReport rep = check_identities(pi_k);
        json out;
        out["check"] = "identities";
        out["k"] = pi_k;
        out["tuples_checked"] = rep.tuples_checked;
        out["tuples_out_of_range"] = rep.tuples_skipped;
        out["pass"] = rep.passed;
        if (!rep.passed) out["violation"] = rep.first_violation;
        out["seconds"] = seconds_since(t0);
        emit(out, "");
        if (!rep.passed) exit_code = 1;
    });

    // ---- selftest ----
    auto* self = app.add_subcommand(
        "selftest", "regenerate every golden table and diff bit-exactly");
    self->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        json rows = json::array();
        for (int k = 2; k <= 7; ++k)
            exit_code |= diff_one('Q', k, build_charge(k), rows);
        for (int k = 2; k <= 7; ++k) {
            auto gs = boost_series(k, 4 * k);
            exit_code |= diff_one('G', k, gs[k - 1], rows);
        }
        auto ars = a_series_batch(7, 23);
        for (int k = 2; k <= 7; ++k)
            exit_code |= diff_one('A', k, ars[k].density, rows);
        json out;
        out["check"] = "selftest";
        out["results"] = rows;
        out["pass"] = exit_code == 0;
        out["seconds"] = seconds_since(t0);
        emit(out, "");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cerr << err.dump(2) << std::endl;
        return 2;
    }
    return exit_code;
}
