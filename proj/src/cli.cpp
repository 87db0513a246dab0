#include "cablefloer/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "cablefloer/colimit.hpp"
#include "cablefloer/gradings.hpp"
#include "cablefloer/hybridge.hpp"
#include "cablefloer/io.hpp"
#include "cablefloer/parallel.hpp"
#include "cablefloer/presentation.hpp"
#include "cablefloer/presets.hpp"

namespace cf::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text)
{
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        Range r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
        if (r.hi < r.lo)
            throw std::invalid_argument("empty range: " + text);
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad range: " + text);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("bad range: " + text);
    }
}

LaurentPoly resolve_delta(const std::string& knot, const std::string& delta)
{
    if (!knot.empty() && !delta.empty())
        throw std::invalid_argument("give either --knot or --delta, not both");
    if (!knot.empty())
        return knot_preset(knot);
    if (!delta.empty())
        return parse_poly(delta);
    throw std::invalid_argument("need --knot NAME or --delta POLY");
}

int tower_dim(int h, int d)
{
    int top = -2 * h;
    return (d <= top && (top - d) % 2 == 0) ? 1 : 0;
}

std::string join_tabs(const std::vector<std::string>& cells)
{
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            s += '\t';
        s += cells[i];
    }
    return s;
}

/* ------------------------------- hfunc ---------------------------------- */

struct HfuncOpts {
    std::string knot, delta, range = "-5..5", format = "tsv";
    std::vector<int> cable;
};

int run_hfunc(const HfuncOpts& o, std::ostream& out)
{
    HKnot hk = HKnot::from_delta(resolve_delta(o.knot, o.delta));
    Range r = parse_range(o.range);
    if (o.cable.empty()) {
        if (o.format == "json") {
            json j = json_root("hfunc");
            j["genus"] = hk.genus();
            j["head"] = hk.staircase().head;
            json rows = json::array();
            for (int s = r.lo; s <= r.hi; ++s)
                rows.push_back({{"s", s}, {"h", hk.h(s)}});
            j["rows"] = rows;
            out << j.dump(2) << '\n';
        } else {
            out << "s\th\n";
            for (int s = r.lo; s <= r.hi; ++s)
                out << s << '\t' << hk.h(s) << '\n';
        }
        return kExitOk;
    }
    if (o.cable.size() != 2)
        throw std::invalid_argument("--cable expects n,m");
    int n = o.cable[0], m = o.cable[1];
    bool verified = m >= lspace_threshold(hk);
    std::vector<int> grid = h_stab_grid(hk, n, m, r.lo, r.hi, thread_count());
    if (o.format == "json") {
        json j = json_root("hfunc-cable");
        j["n"] = n;
        j["m"] = m;
        j["regime_verified"] = verified;
        json rows = json::array();
        for (std::size_t i = 0; i < grid.size(); ++i)
            rows.push_back({{"sbar", box_point(n, r.lo, r.hi, i)}, {"h", grid[i]}});
        j["rows"] = rows;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    if (!verified)
        out << "# unverified L-space regime: m < " << lspace_threshold(hk) << "\n";
    std::vector<std::string> hdr;
    for (int i = 1; i <= n; ++i)
        hdr.push_back("sbar_" + std::to_string(i));
    hdr.push_back("h");
    out << join_tabs(hdr) << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<std::string> cells;
        for (int v : box_point(n, r.lo, r.hi, i))
            cells.push_back(std::to_string(v));
        cells.push_back(std::to_string(grid[i]));
        out << join_tabs(cells) << '\n';
    }
    return kExitOk;
}

/* ------------------------------- present -------------------------------- */

struct PresentOpts {
    std::string kind, knot, delta, window = "-2..2", maslov = "-12..0", format = "tsv";
    int n = 2, m = 1, trunc = 0;
    bool oracle = false;
};

int run_present(const PresentOpts& o, std::ostream& out, std::ostream& err)
{
    Range w = parse_range(o.window), dm = parse_range(o.maslov);
    Presentation pres;
    std::function<int(const Slice&)> oracle_fn;
    int lat_off = 0;  // a2 = 2*sbar + lat_off
    std::string note;

    if (o.kind == "torus") {
        pres = build_torus(o.n, o.m);
        lat_off = o.m * (o.n - 1);
        oracle_fn = [&](const Slice& s) { return tower_dim(h_torus(o.n, o.m, s.alex2), s.d); };
    } else {
        HKnot hk = HKnot::from_delta(resolve_delta(o.knot, o.delta));
        int trunc = o.trunc > 0 ? o.trunc : default_trunc(hk.staircase(), w.lo);
        note = "truncation " + std::to_string(trunc) + "; exact for maslov > " +
               std::to_string(-2 * trunc);
        if (o.kind == "knot") {
            pres = build_knot(hk.staircase(), trunc);
            oracle_fn = [hk](const Slice& s) { return tower_dim(hk.h(s.alex2[0] / 2), s.d); };
        } else if (o.kind == "colored") {
            pres = build_colored(hk.staircase(), o.n, trunc);
        } else if (o.kind == "tensor") {
            pres = build_tensor(hk.staircase(), o.n, trunc);
        } else {
            throw std::invalid_argument("unknown --kind (torus|knot|colored|tensor)");
        }
        if (o.kind != "knot") {
            oracle_fn = [hk](const Slice& s) {
                std::vector<int> sbar(s.alex2.size());
                for (std::size_t i = 0; i < sbar.size(); ++i)
                    sbar[i] = s.alex2[i] / 2;
                return colored_dim(hk, static_cast<int>(sbar.size()), sbar, s.d);
            };
        }
    }

    const int n = pres.n;
    std::vector<Slice> slices = box_slices(n, 2 * w.lo + lat_off, 2 * w.hi + lat_off, dm.lo, dm.hi);
    std::vector<int> dims = dim_scan(pres, slices, thread_count());

    std::vector<Discrepancy> bad;
    if (o.oracle)
        for (std::size_t i = 0; i < slices.size(); ++i)
            if (dims[i] != oracle_fn(slices[i]))
                bad.push_back({slices[i], dims[i], oracle_fn(slices[i])});

    if (o.format == "json") {
        json j = json_root("present-" + o.kind);
        if (!note.empty())
            j["note"] = note;
        json rows = json::array();
        for (std::size_t i = 0; i < slices.size(); ++i) {
            json row{{"sbar", json::array()}, {"d", slices[i].d}, {"dim", dims[i]}};
            for (int v : slices[i].alex2)
                row["sbar"].push_back((v - lat_off) / 2);
            if (o.oracle)
                row["want"] = oracle_fn(slices[i]);
            rows.push_back(row);
        }
        j["rows"] = rows;
        if (o.oracle)
            j["mismatches"] = bad.size();
        out << j.dump(2) << '\n';
    } else {
        if (!note.empty())
            out << "# " << note << '\n';
        std::vector<std::string> hdr;
        for (int i = 1; i <= n; ++i)
            hdr.push_back("sbar_" + std::to_string(i));
        hdr.push_back("d");
        hdr.push_back("dim");
        if (o.oracle)
            hdr.push_back("want");
        out << join_tabs(hdr) << '\n';
        for (std::size_t i = 0; i < slices.size(); ++i) {
            std::vector<std::string> cells;
            for (int v : slices[i].alex2)
                cells.push_back(std::to_string((v - lat_off) / 2));
            cells.push_back(std::to_string(slices[i].d));
            cells.push_back(std::to_string(dims[i]));
            if (o.oracle)
                cells.push_back(std::to_string(oracle_fn(slices[i])));
            out << join_tabs(cells) << '\n';
        }
    }
    if (o.oracle && !bad.empty()) {
        err << bad.size() << " slices disagree with the closed-form dimension\n";
        return kExitMismatch;
    }
    return kExitOk;
}

/* ------------------------------- algebra -------------------------------- */

int run_algebra_verify(int n, int max_m, std::ostream& out)
{
    bool lin = n >= 2 ? verify_linear_all(n) : true;
    bool quad = verify_quadratic_all(n);
    bool towers = verify_tower_gradings(n, max_m);
    out << "linear relations n=" << n << ": " << (lin ? "ok" : "FAIL") << '\n';
    out << "quadratic relations n=" << n << ": " << (quad ? "ok" : "FAIL") << '\n';
    out << "basis gradings m<=" << max_m << ": " << (towers ? "ok" : "FAIL") << '\n';
    return (lin && quad && towers) ? kExitOk : kExitMismatch;
}

int run_algebra_mul(int n, const std::string& word, std::ostream& out)
{
    TowerBasisElt x = word_to_basis(n, parse_word(word, n));
    json j = json_root("algebra-elt");
    j.update(to_json(x));
    out << j.dump(2) << '\n';
    return kExitOk;
}

/* ------------------------------- colored -------------------------------- */

struct ColoredOpts {
    std::string knot, delta, format = "text";
    int n = 2, trunc = 0;
};

int run_colored(const ColoredOpts& o, std::ostream& out)
{
    HKnot hk = HKnot::from_delta(resolve_delta(o.knot, o.delta));
    int trunc = o.trunc > 0 ? o.trunc : default_trunc(hk.staircase(), -hk.genus());
    Presentation pres = build_colored(hk.staircase(), o.n, trunc);
    if (o.format == "json") {
        json j = json_root("colored");
        j["n"] = o.n;
        j["trunc"] = trunc;
        json gens = json::array();
        for (auto& g : pres.gens)
            gens.push_back({{"label", g.label}, {"sbar", g.alex2[0] / 2}, {"maslov", g.maslov}});
        j["generators"] = gens;
        json rels = json::array();
        auto lines = relation_lines(pres, false);
        for (std::size_t i = 0; i < pres.rels.size(); ++i)
            rels.push_back({{"line", lines[i]}, {"stable_m", pres.rels[i].stable_m}});
        j["relations"] = rels;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "# colored module, n=" << o.n << ", truncation " << trunc << "\n";
    for (auto& g : pres.gens)
        out << g.label << ": alexander " << g.alex2[0] / 2 << "*1, maslov " << g.maslov << "\n";
    for (auto& line : relation_lines(pres, true))
        out << line << '\n';
    return kExitOk;
}

/* ------------------------------- colimit -------------------------------- */

struct ColimitOpts {
    std::string knot, delta, degrees_file, mrange = "6..14", box = "-3..2", maslov = "-12..0";
    int n = 2, window = 3;
    bool oracle = false;
};

/* One degree per line: n sbar values then the maslov; '#' starts a comment. */
std::vector<DegreeKey> read_degrees(const std::string& path, int n)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open degrees file: " + path);
    std::vector<DegreeKey> degrees;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (std::size_t hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream is(line);
        std::vector<int> vals;
        int v;
        while (is >> v)
            vals.push_back(v);
        if (vals.empty())
            continue;
        if (static_cast<int>(vals.size()) != n + 1)
            throw std::invalid_argument("degrees file line " + std::to_string(lineno) +
                                        ": expected " + std::to_string(n + 1) + " integers");
        degrees.push_back({{vals.begin(), vals.end() - 1}, vals.back()});
    }
    return degrees;
}

int run_colimit(const ColimitOpts& o, std::ostream& out, std::ostream& err)
{
    HKnot hk = HKnot::from_delta(resolve_delta(o.knot, o.delta));
    Range mr = parse_range(o.mrange);
    std::vector<DegreeKey> degrees;
    if (!o.degrees_file.empty()) {
        degrees = read_degrees(o.degrees_file, o.n);
    } else {
        Range box = parse_range(o.box), dm = parse_range(o.maslov);
        for (std::size_t i = 0; i < box_size(o.n, box.lo, box.hi); ++i) {
            std::vector<int> sbar = box_point(o.n, box.lo, box.hi, i);
            for (int d = dm.lo; d <= dm.hi; ++d)
                if (d % 2 == 0)
                    degrees.push_back({sbar, d});
        }
    }
    DirectedSystem sys = lspace_phi0_system(hk, o.n, degrees, mr.lo, mr.hi);
    auto reports = colimit_dims(sys, o.window);

    json j = json_root("colimit");
    j["m_lo"] = mr.lo;
    j["m_hi"] = mr.hi;
    j["window"] = o.window;
    json rows = json::array();
    int mismatches = 0;
    for (auto& [key, rep] : reports) {
        json row{{"sbar", key.sbar},
                 {"d", key.d},
                 {"dim", rep.dim},
                 {"stabilized", rep.stabilized},
                 {"first_stable_m", rep.first_stable_m}};
        if (o.oracle) {
            int want = colored_dim(hk, o.n, key.sbar, key.d);
            row["want"] = want;
            if (want != rep.dim || !rep.stabilized)
                ++mismatches;
        }
        rows.push_back(row);
    }
    j["rows"] = rows;
    if (o.oracle)
        j["mismatches"] = mismatches;
    out << j.dump(2) << '\n';
    if (o.oracle && mismatches) {
        err << mismatches << " degrees disagree with the colored dimension\n";
        return kExitMismatch;
    }
    return kExitOk;
}

/* ------------------------------- grading -------------------------------- */

int run_grading(const std::string& which, int n, int k, int lk_total,
                const std::vector<int>& lk, const std::string& pairs, std::ostream& out)
{
    json j = json_root("grading-" + which);
    if (which == "phi") {
        j["shift"] = to_json(phi_shift(n, k));
    } else if (which == "phi-general") {
        j["shift"] = to_json(phi_shift_general(k, lk_total, lk));
    } else if (which == "crossing") {
        CrossingShifts cs = crossing_shifts(n, k);
        j["g"] = to_json(cs.g);
        j["f"] = to_json(cs.f);
        j["g_colored"] = to_json(cs.g_colored);
        j["f_colored"] = to_json(cs.f_colored);
    } else if (which == "psi") {
        std::vector<std::pair<int, int>> Z;
        std::istringstream is(pairs);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            std::size_t colon = tok.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("pairs look like 1:2,2:3");
            Z.emplace_back(std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1)));
        }
        j["shift"] = to_json(psi_shift(n, Z));
    } else {
        throw std::invalid_argument("unknown grading kind");
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

/* ------------------------------- checks --------------------------------- */

int run_euler_check(const std::string& knot, const std::string& delta, int n,
                    const std::string& mrange, std::ostream& out)
{
    LaurentPoly d = resolve_delta(knot, delta);
    Range mr = parse_range(mrange);
    bool all_ok = true;
    for (int m = mr.lo; m <= mr.hi; ++m) {
        StableChiReport rep = stable_chi_check(d, n, m);
        out << "m=" << m << ": " << (rep.ok ? "ok" : "FAIL at t^" + halved(rep.first_diff2))
            << '\n';
        all_ok = all_ok && rep.ok;
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int run_hy_check(int n, std::ostream& out)
{
    bool ok = verify_hy(n);
    out << "generator substitution n=" << n << ": " << (ok ? "ok" : "FAIL") << '\n';
    for (int i = 1; i <= n; ++i) {
        bool t = telescope_check(n, i);
        out << "telescope i=" << i << ": " << (t ? "ok" : "FAIL") << '\n';
        ok = ok && t;
    }
    return ok ? kExitOk : kExitMismatch;
}

/* ------------------------------- golden --------------------------------- */

int run_golden(std::ostream& out)
{
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        out << (ok ? "ok " : "FAIL ") << name << '\n';
        if (!ok)
            ++failures;
    };

    LaurentPoly d34 = parse_poly("t^3 - t^2 + 1 - t^-2 + t^-3");
    HKnot t34 = HKnot::from_delta(d34);
    check("staircase T(3,4) head {3,0,-1}", t34.staircase().head == std::vector<int>{3, 0, -1});
    {
        std::vector<int> want{5, 4, 3, 3, 2, 1, 1, 1, 0, 0, 0};
        bool ok = true;
        for (int s = -5; s <= 5; ++s)
            ok = ok && t34.h(s) == want[s + 5];
        check("h table T(3,4) on [-5,5]", ok);
    }
    {
        /* the published 11x11 stabilized grid at n=2, m=6 */
        bool ok = true;
        for (int s1 = -5; s1 <= 5; ++s1)
            for (int s2 = -5; s2 <= 5; ++s2) {
                int lo = std::min(s1, s2), hi = std::max(s1, s2);
                if (h_stab(t34, 2, 6, {s1, s2}) != t34.h(lo) + t34.h(hi + 6))
                    ok = false;
            }
        check("h_stab grid T(3,4) n=2 m=6 sorted-sum", ok);
        check("h_stab corrections m=7", h_stab(t34, 2, 7, {-4, -4}) == 4 &&
                                            h_stab(t34, 2, 7, {-5, -5}) == 6);
        check("h_stab corrections m=8", h_stab(t34, 2, 8, {-5, -5}) == 5);
    }
    {
        TowerBasisElt lhs = mul(gen_a(3, 0), gen_a(3, 2));
        TowerBasisElt rhs = act_uu(mul(gen_a(3, 1), gen_a(3, 1)));
        check("a0 a2 = U a1^2 (n=3)", lhs == rhs);
        check("linear relations n<=4", verify_linear_all(2) && verify_linear_all(3) &&
                                           verify_linear_all(4));
        check("quadratic relations n<=4", verify_quadratic_all(3) && verify_quadratic_all(4));
    }
    {
        HKnot unknot = HKnot::from_delta(LaurentPoly(1));
        LocalizeResult a1 = localize(gen_a(2, 1), unknot);
        check("localized a1 is the degree (-1,-1) maslov -2 class",
              a1.elt == ColoredBasisElt{{-1, -1}, 0} &&
                  colored_grading(unknot, a1.elt).maslov == -2);
    }
    {
        Presentation pres = build_colored(t34.staircase(), 2, 6);
        auto lines = relation_lines(pres, false);
        std::vector<std::string> want{
            "U1 zt3 = V2 (V1 V2)^2 zt0", "U2 zt3 = V1 (V1 V2)^2 zt0",
            "U1 zt0 = V2 zt-1",          "U2 zt0 = V1 zt-1",
            "U1 zt-1 = V2 (V1 V2) zt-3", "U2 zt-1 = V1 (V1 V2) zt-3",
            "U1 zt-3 = V2 zt-4",         "U2 zt-3 = V1 zt-4",
            "U1 zt-4 = V2 zt-5",         "U2 zt-4 = V1 zt-5"};
        bool ok = lines.size() >= want.size();
        for (std::size_t i = 0; ok && i < want.size(); ++i)
            ok = lines[i] == want[i];
        check("colored zigzag relations T(3,4) n=2", ok);
        check("relation onsets 3/4/6/7/8",
              pres.rels[0].stable_m == 3 && pres.rels[2].stable_m == 4 &&
                  pres.rels[4].stable_m == 6 && pres.rels[6].stable_m == 7 &&
                  pres.rels[8].stable_m == 8);
        check("deep generator degrees", pres.gens[4].maslov == -8 && pres.gens[5].maslov == -10);
    }
    {
        DirectedSystem sys = lspace_phi0_system(t34, 2, {{{-4, -4}, -8}}, 6, 14);
        auto deg = sys.degrees.begin()->second;
        bool ok = deg.dims[0] == 0 && deg.dims[1] == 1 && deg.dims[2] == 1;
        auto rep = colimit_dims(sys, 3).begin()->second;
        check("tower appears at m=7 for degree (-4,-4,-8)",
              ok && rep.dim == 1 && rep.stabilized && rep.first_stable_m == 7);
    }
    {
        TriGrading p0 = phi_shift(2, 0);
        check("phi_0 shift (n=2)", p0.maslov == 0 && p0.alex2 == std::vector<int>{1, 1} &&
                                       p0.twist == 1);
        CrossingShifts cs = crossing_shifts(1, 0);
        check("crossing renormalization (n=1, j=0)",
              cs.g_colored.alex2 == std::vector<int>{2} &&
                  cs.f_colored.alex2 == std::vector<int>{0});
    }
    check("generator substitution n=3", verify_hy(3));
    return failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

/* --------------------------------- run ---------------------------------- */

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"cable and colored knot Floer calculators"};
    app.name("cablefloer");
    app.require_subcommand(1);

    HfuncOpts ho;
    CLI::App* hfunc = app.add_subcommand("hfunc", "h-function tables and cable grids");
    hfunc->add_option("--knot", ho.knot, "preset knot name (unknot, T(p,q))");
    hfunc->add_option("--delta", ho.delta, "Alexander polynomial");
    hfunc->add_option("--cable", ho.cable, "cable parameters n,m")->delimiter(',');
    hfunc->add_option("--range", ho.range, "coordinate range a..b");
    hfunc->add_option("--format", ho.format, "tsv or json");

    PresentOpts po;
    CLI::App* present = app.add_subcommand("present", "graded module dimensions");
    present->add_option("kind", po.kind, "torus | knot | colored | tensor")->required();
    present->add_option("--knot", po.knot, "preset knot name");
    present->add_option("--delta", po.delta, "Alexander polynomial");
    present->add_option("--n", po.n, "strand count");
    present->add_option("--m", po.m, "twist parameter (torus)");
    present->add_option("--trunc", po.trunc, "generator truncation (0 = auto)");
    present->add_option("--window", po.window, "sbar window a..b");
    present->add_option("--maslov", po.maslov, "maslov window a..b");
    present->add_option("--format", po.format, "tsv or json");
    present->add_flag("--oracle", po.oracle, "compare against closed-form dimensions");

    int alg_n = 2, alg_max_m = 4;
    bool alg_all = false;
    std::string alg_word;
    CLI::App* algebra = app.add_subcommand("algebra", "cable algebra checks and products");
    CLI::App* alg_verify = algebra->add_subcommand("verify", "check defining relations");
    alg_verify->add_option("--n", alg_n, "strand count");
    alg_verify->add_option("--max-m", alg_max_m, "largest twist for the basis-grading scan");
    alg_verify->add_flag("--all", alg_all, "accepted for compatibility; everything is checked");
    CLI::App* alg_mul = algebra->add_subcommand("mul", "normalize a word to basis form");
    alg_mul->add_option("--n", alg_n, "strand count");
    alg_mul->add_option("--word", alg_word, "letters like \"a0 a1 U1 V2 U\"")->required();

    ColoredOpts co;
    CLI::App* colored = app.add_subcommand("colored", "colored module generators and relations");
    colored->add_option("--knot", co.knot, "preset knot name");
    colored->add_option("--delta", co.delta, "Alexander polynomial");
    colored->add_option("--n", co.n, "strand count");
    colored->add_option("--trunc", co.trunc, "generator truncation (0 = auto)");
    colored->add_option("--format", co.format, "text or json");

    ColimitOpts lo;
    CLI::App* colim = app.add_subcommand("colimit", "twist directed systems and their limits");
    colim->add_option("--knot", lo.knot, "preset knot name");
    colim->add_option("--delta", lo.delta, "Alexander polynomial");
    colim->add_option("--n", lo.n, "strand count");
    colim->add_option("--degrees", lo.degrees_file, "file of degree rows: sbar_1.. sbar_n d");
    colim->add_option("--m-range", lo.mrange, "twist range a..b");
    colim->add_option("--box", lo.box, "sbar box a..b");
    colim->add_option("--maslov", lo.maslov, "maslov window a..b");
    colim->add_option("--window", lo.window, "stabilization window");
    colim->add_flag("--oracle", lo.oracle, "compare against colored dimensions");

    std::string grad_kind, grad_pairs;
    int grad_n = 2, grad_k = 0, grad_lk_total = 0;
    std::vector<int> grad_lk;
    CLI::App* grading = app.add_subcommand("grading", "cobordism map grading shifts");
    grading->add_option("kind", grad_kind, "phi | phi-general | crossing | psi")->required();
    grading->add_option("--n", grad_n, "strand count");
    grading->add_option("--k,--j", grad_k, "map index");
    grading->add_option("--lk-total", grad_lk_total, "total linking number");
    grading->add_option("--lk", grad_lk, "per-strand linking numbers")->delimiter(',');
    grading->add_option("--pairs", grad_pairs, "swap pairs like 1:2,2:3");

    std::string ec_knot, ec_delta, ec_m = "1..8";
    int ec_n = 2;
    CLI::App* euler = app.add_subcommand("euler-check", "stabilized Euler characteristic");
    euler->add_option("--knot", ec_knot, "preset knot name");
    euler->add_option("--delta", ec_delta, "Alexander polynomial");
    euler->add_option("--n", ec_n, "strand count");
    euler->add_option("--m", ec_m, "twist or twist range");

    int hy_n = 3;
    CLI::App* hy = app.add_subcommand("hy-check", "deformed generator substitution");
    hy->add_option("--n", hy_n, "strand count");

    CLI::App* golden = app.add_subcommand("golden", "run the frozen reference examples");

    std::vector<const char*> argv;
    argv.push_back("cablefloer");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (*hfunc)
            return run_hfunc(ho, out);
        if (*present)
            return run_present(po, out, err);
        if (*algebra) {
            if (*alg_verify)
                return run_algebra_verify(alg_n, alg_max_m, out);
            if (*alg_mul)
                return run_algebra_mul(alg_n, alg_word, out);
            throw std::invalid_argument("algebra needs a verify or mul subcommand");
        }
        if (*colored)
            return run_colored(co, out);
        if (*colim)
            return run_colimit(lo, out, err);
        if (*grading)
            return run_grading(grad_kind, grad_n, grad_k, grad_lk_total, grad_lk, grad_pairs, out);
        if (*euler)
            return run_euler_check(ec_knot, ec_delta, ec_n, ec_m, out);
        if (*hy)
            return run_hy_check(hy_n, out);
        if (*golden)
            return run_golden(out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " (at offset " << e.pos << ")\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace cf::cli
