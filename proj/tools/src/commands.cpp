#include "commands.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quatcong::cli {

namespace {

std::string join(const std::vector<long>& v, const char* sep = " ") {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

LevelData level(long n, const Context& ctx) { return obtain_level(n, ctx.bound, ctx.cache_dir); }

void require_modulus(long n, long m) {
    if (m < 1 || n % m != 0) throw std::invalid_argument("modulus must be a positive divisor of the level");
}

}  // namespace

json envelope(const std::string& command, const json& inputs, const CommandResult& r) {
    return {{"command", command}, {"inputs", inputs}, {"result", r.result}, {"exit_code", r.exit_code}};
}

CommandResult cmd_classset(long n, const Context& ctx) {
    LevelData d = level(n, ctx);
    CommandResult r;
    r.result = classset_summary(d.classes);
    std::vector<long> units;
    for (const auto& c : d.classes.classes) units.push_back(c.unit_group_order);
    std::ostringstream os;
    os << "level " << n << ": B = (" << d.classes.algebra.a << ", " << d.classes.algebra.b << ")\n"
       << "class number h = " << d.classes.size() << "\n"
       << "mass = " << to_string(d.classes.mass) << "\n"
       << "unit group orders: " << join(units) << "\n";
    for (size_t i = 0; i < d.classes.size(); ++i) os << "  [" << i << "] " << d.classes.classes[i].representative.key() << "\n";
    r.text = os.str();
    return r;
}

CommandResult cmd_brandt(long n, long prime, const Context& ctx) {
    if (prime != 0 && (!is_prime(prime) || n % prime == 0))
        throw std::invalid_argument("prime must not divide the level");
    Context c = ctx;
    c.bound = std::max(ctx.bound, prime);
    LevelData d = level(n, c);
    CommandResult r;
    json mats = json::object();
    std::ostringstream os;
    for (const auto& b : d.brandt) {
        if (prime != 0 && b.prime != prime) continue;
        mats[std::to_string(b.prime)] = to_json(b.entries);
        os << "T_" << b.prime << ":\n";
        for (size_t i = 0; i < b.size(); ++i) os << "  " << join(b.entries.row(i)) << "\n";
    }
    r.result = {{"level", n}, {"bound", d.bound}, {"brandt", mats}};
    r.text = os.str();
    return r;
}

CommandResult cmd_involutions(long n, const Context& ctx) {
    LevelData d = level(n, ctx);
    CommandResult r;
    json out = json::object();
    std::ostringstream os;
    for (const auto& s : d.involutions) {
        out[std::to_string(s.prime)] = {{"permutation", s.permutation}, {"fixed_count", s.fixed_count}};
        std::vector<long> perm(s.permutation.begin(), s.permutation.end());
        os << "sigma_" << s.prime << ": " << join(perm) << "  (fixed points: " << s.fixed_count << ")\n";
    }
    r.result = {{"level", n}, {"involutions", out}};
    r.text = os.str();
    return r;
}

CommandResult cmd_graph(long n, long modulus, const std::string& pattern, const Context& ctx) {
    require_modulus(n, modulus);
    SignPattern chi = SignPattern::parse(modulus, pattern);
    LevelData d = level(n, ctx);
    SignedGraph g = build_graph(d.classes, d.involutions, chi);
    SIdealClassSet comps = components(g);
    CommandResult r;
    json edges = json::array(), cj = json::array();
    for (const auto& e : g.edges) edges.push_back(to_json(e));
    std::ostringstream os;
    os << "pattern " << chi.to_string() << ": " << comps.t() << " components\n";
    for (const auto& comp : comps.components) {
        Admissibility a = admissible(g, comp);
        json nc = json::array();
        for (const auto& e : a.negative_cycle) nc.push_back(to_json(e));
        cj.push_back({{"vertices", comp}, {"admissible", a.admissible}, {"negative_cycle", nc}});
        std::vector<long> v(comp.begin(), comp.end());
        os << "  {" << join(v, ",") << "} " << (a.admissible ? "admissible" : "not admissible") << "\n";
    }
    r.result = {{"level", n}, {"pattern", chi.to_string()}, {"edges", edges}, {"components", cj}};
    r.text = os.str();
    return r;
}

CommandResult cmd_sclass(long n, long modulus, const Context& ctx) {
    require_modulus(n, modulus);
    LevelData d = level(n, ctx);
    SClassNumbers s = sclass_numbers(d.classes, d.involutions, modulus);
    CommandResult r;
    json counts = json::array();
    std::ostringstream os;
    os << "h_B,S = " << s.h_bs << "\n";
    for (const auto& [chi, c] : s.admissible_counts) {
        size_t dim = joint_eigenspace_dim(d.classes.size(), d.involutions, chi);
        counts.push_back({{"pattern", chi.to_string()}, {"admissible", c}, {"eigenspace_dim", dim}});
        os << "  " << chi.to_string() << ": " << c << " admissible, eigenspace dimension " << dim << "\n";
        if (dim != c) r.exit_code = kClaimFailed;
    }
    r.result = {{"level", n}, {"modulus", modulus}, {"h_bs", s.h_bs}, {"patterns", counts}};
    r.text = os.str();
    return r;
}

CommandResult cmd_dims(long n, int k, long prime, long modulus, const Context& ctx) {
    LevelData d = level(n, ctx);
    const auto& cs = d.classes;
    CommandResult r;
    long total = dim_Mk(cs, k);
    long oracle = k == 0 ? 1 + dim_Sk_new_oracle(n, 2) : dim_Sk_new_oracle(n, k + 2);
    r.result = {{"level", n}, {"k", k}, {"dim_Mk", total}, {"classical", oracle}};
    std::ostringstream os;
    os << "dim M_" << k << " = " << total << " (classical side " << oracle << ")\n";
    if (total != oracle) r.exit_code = kClaimFailed;
    if (prime != 0) {
        if (!is_prime(prime) || n % prime != 0) throw std::invalid_argument("prime must divide the level");
        long plus = dim_Mk_chi_single(cs, k, prime, SignValue::plus());
        long minus = dim_Mk_chi_single(cs, k, prime, SignValue::minus());
        r.result["single_prime"] = {{"prime", prime}, {"plus", plus}, {"minus", minus}};
        os << "  sign + at " << prime << ": " << plus << ", sign -: " << minus << "\n";
        if (plus + minus != total) r.exit_code = kClaimFailed;
    }
    if (modulus > 1) {
        require_modulus(n, modulus);
        json pats = json::array();
        for (const auto& chi : SignPattern::all_patterns(modulus)) {
            auto v = dim_Mk_chi(cs, d.involutions, k, chi);
            pats.push_back({{"pattern", chi.to_string()}, {"dim", v ? json(*v) : json("not computed")}});
            os << "  " << chi.to_string() << ": " << (v ? std::to_string(*v) : std::string("not computed")) << "\n";
        }
        r.result["patterns"] = pats;
    }
    r.text = os.str();
    return r;
}

CommandResult cmd_trace_wp(long n, long prime, const Context& ctx) {
    LevelData d = level(n, ctx);
    CommandResult r;
    json rows = json::array();
    std::ostringstream os;
    for (const auto& s : d.involutions) {
        if (prime != 0 && s.prime != prime) continue;
        long f = trace_Wp_formula(s.prime, n);
        long g = 1 - s.fixed_count;
        rows.push_back({{"prime", s.prime}, {"formula", f}, {"fixed_points", s.fixed_count}, {"agree", f == g}});
        os << "p = " << s.prime << ": formula " << f << ", 1 - fixed points = " << g << (f == g ? "" : "  DISCREPANCY") << "\n";
        if (f != g) r.exit_code = kClaimFailed;
    }
    if (prime != 0 && rows.empty()) throw std::invalid_argument("prime must divide the level");
    r.result = {{"level", n}, {"traces", rows}};
    r.text = os.str();
    return r;
}

CommandResult cmd_criteria(long n, long modulus, const Context&) {
    require_admissible_level(n);
    CommandResult r;
    json fp = json::array(), eq = json::array();
    std::ostringstream os;
    for (long p : prime_factors(n)) {
        bool v = fixedpoint_free_criteria(p, n);
        fp.push_back({{"prime", p}, {"fixed_point_free", v}});
        os << "sigma_" << p << " fixed-point free by the criteria: " << (v ? "yes" : "no") << "\n";
    }
    std::vector<long> ms = modulus > 0 ? std::vector<long>{modulus} : divisors(n);
    for (long m : ms) {
        require_modulus(n, m);
        bool v = equidist_criteria(m, n);
        eq.push_back({{"modulus", m}, {"equidistributed", v}});
        os << "M = " << m << ": equidistribution criteria " << (v ? "hold" : "fail") << "\n";
    }
    r.result = {{"level", n}, {"fixed_point_free", fp}, {"equidistribution", eq}};
    r.text = os.str();
    return r;
}

CommandResult cmd_verify(Statement s, long n, long modulus, const Context& ctx) {
    require_admissible_level(n);
    if (s == Statement::thm1) require_modulus(n, modulus);
    if (s == Statement::thm1 && !equidist_criteria(modulus, n)) {
        CongruenceReport rep;
        rep.level = n;
        rep.modulus = modulus;
        rep.statement = s;
        rep.notes.push_back("hypothesis not satisfied: the equidistribution criteria fail for this modulus");
        CommandResult r;
        r.result = to_json(rep);
        r.exit_code = kHypothesisFailed;
        r.text = "thm1 at level " + std::to_string(n) + ", modulus " + std::to_string(modulus) + ": hypothesis not satisfied\n";
        return r;
    }
    LevelData d = level(n, ctx);
    CongruenceReport rep;
    switch (s) {
        case Statement::thm1: rep = verify_thm1(d, modulus); break;
        case Statement::thm2: rep = verify_thm2(d); break;
        case Statement::prop54: rep = eisenstein_congruence_construct(d).report; break;
        case Statement::prop55: rep = cuspidal_witness(d); break;
    }
    CommandResult r;
    r.result = to_json(rep);
    r.exit_code = !rep.hypothesis_ok ? kHypothesisFailed : rep.verified ? kOk : kClaimFailed;
    std::ostringstream os;
    os << to_string(s) << " at level " << n;
    if (s == Statement::thm1) os << ", modulus " << modulus;
    os << ": " << (!rep.hypothesis_ok ? "hypothesis not satisfied" : rep.verified ? "verified" : "FAILED") << "\n";
    for (const auto& [name, v] : rep.checks) os << "  " << name << ": " << (v ? "yes" : "no") << "\n";
    for (const auto& note : rep.notes) os << "  note: " << note << "\n";
    r.text = os.str();
    return r;
}

CommandResult cmd_survey(const SurveyOptions& opt) {
    if (opt.min > opt.max && opt.max >= 0) {
        CommandResult r;
        r.result = {{"levels", 0}, {"ledger", json::array()}, {"failures", json::array()}};
        r.text = "empty range\n";
        return r;
    }
    SurveyOutcome o = run_survey(opt);
    CommandResult r;
    r.result = {{"levels", o.ledger.size()}, {"ledger", o.ledger}, {"failures", o.failures}};
    r.exit_code = o.failures.empty() ? kOk : kClaimFailed;
    std::ostringstream os;
    os << "level    h    t  checks\n";
    for (const auto& e : o.ledger) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%5ld %4ld %4ld  ", e["level"].get<long>(), e.value("class_number", 0l),
                      e.value("type_number", 0l));
        os << buf;
        bool ok = !e.contains("error");
        if (e.contains("checks"))
            for (const auto& [k, v] : e["checks"].items()) ok = ok && v.get<bool>();
        os << (ok ? "ok" : "FAIL") << "\n";
    }
    for (const auto& f : o.failures) os << "failure: " << f << "\n";
    os << o.ledger.size() << " levels, " << o.failures.size() << " failures\n";
    r.text = os.str();
    return r;
}

CommandResult cmd_cache_show(long n, const Context& ctx) {
    if (!ctx.cache_dir) throw std::invalid_argument("no cache directory (set QUATCONG_CACHE_DIR or --cache-dir)");
    auto p = cache_path(*ctx.cache_dir, n);
    CommandResult r;
    if (!std::filesystem::exists(p)) {
        r.result = {{"level", n}, {"cached", false}};
        r.text = "level " + std::to_string(n) + " not cached\n";
        return r;
    }
    std::ifstream in(p);
    json rec = json::parse(in);
    LevelData d = level_from_record(rec);
    r.result = {{"level", n}, {"cached", true}, {"path", p.string()}, {"checksum", rec["checksum"]},
                {"class_number", d.classes.size()}, {"bound", d.bound}};
    r.text = "level " + std::to_string(n) + ": " + std::to_string(d.classes.size()) + " classes, bound " +
             std::to_string(d.bound) + ", checksum " + rec["checksum"].get<std::string>() + "\n";
    return r;
}

CommandResult cmd_cache_verify(long n, const Context& ctx) {
    LevelData fresh = compute_level(n, ctx.bound);
    json rec = cache_record(fresh);
    LevelData back = level_from_record(json::parse(rec.dump()));
    bool same = cache_record(back).dump() == rec.dump() &&
                classset_summary(back.classes) == classset_summary(fresh.classes) &&
                to_json(verify_thm2(back)) == to_json(verify_thm2(fresh));
    CommandResult r;
    r.result = {{"level", n}, {"round_trip", same}};
    r.exit_code = same ? kOk : kClaimFailed;
    r.text = std::string("cache round trip ") + (same ? "lossless" : "LOSSY") + "\n";
    return r;
}

}  // namespace quatcong::cli
