#include "cyclo/cyclo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace cyclo;
using Json = nlohmann::ordered_json;

namespace {

enum class Status { Ok, Rejected, Error };

struct Envelope {
    std::string command;
    Status status = Status::Ok;
    Json payload = Json::object();

    int exit_code() const { return status == Status::Ok ? 0 : status == Status::Rejected ? 2 : 1; }
};

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::Rejected: return "rejected";
        case Status::Error: return "error";
    }
    return "error";
}

void print_text_value(const Json& v) {
    if (v.is_string()) std::cout << v.get<std::string>();
    else std::cout << v.dump();
}

void emit(const Envelope& env, const std::string& format) {
    if (format == "structured") {
        Json out;
        out["command"] = env.command;
        out["status"] = status_name(env.status);
        out["payload"] = env.payload;
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "status=" << status_name(env.status) << "\n";
    for (auto& [key, v] : env.payload.items()) {
        if (v.is_array()) {
            for (auto& item : v) {
                print_text_value(item);
                std::cout << "\n";
            }
            continue;
        }
        std::cout << key << "=";
        print_text_value(v);
        std::cout << "\n";
    }
}

struct FieldArgs {
    std::optional<i64> p, k, q, d, m;
    std::string modulus, omega;
};

void add_field_flags(CLI::App* cmd, FieldArgs& a) {
    cmd->add_option("--p", a.p, "characteristic");
    cmd->add_option("--k", a.k, "extension degree");
    cmd->add_option("--q", a.q, "field size p^k");
    cmd->add_option("--modulus", a.modulus, "monic modulus coefficients c0,...,ck");
    cmd->add_option("--omega", a.omega, "primitive element in coefficient form");
}

void add_shape_flags(CLI::App* cmd, FieldArgs& a) {
    cmd->add_option("--d", a.d, "index d");
    cmd->add_option("--m", a.m, "modulus m = (q-1)/d");
}

std::vector<i64> parse_int_list(const std::string& s) {
    std::vector<i64> out;
    for (auto& part : detail::split_top(detail::strip_ws(s), ',')) out.push_back(detail::parse_int(part, "modulus coefficient"));
    return out;
}

// Resolves p, k from --p/--k or --q, rejecting inconsistent combinations.
FieldPtr build_field(const FieldArgs& a) {
    i64 p = 0, k = 0;
    if (a.p || a.k) {
        if (!a.p || !a.k) throw Error("--p and --k must be given together");
        p = *a.p;
        k = *a.k;
        if (a.q && ipow(p, static_cast<int>(k)) != *a.q) throw Error("--q disagrees with --p/--k");
    } else if (a.q) {
        auto f = factorize(*a.q);
        if (f.size() != 1) throw Error("--q must be a prime power");
        p = f[0].p;
        k = f[0].k;
    } else {
        throw Error("field needs --p/--k or --q");
    }
    if (!is_prime(p)) throw Error("--p must be prime");
    if (k < 1) throw Error("--k must be positive");
    std::optional<std::vector<i64>> modulus;
    if (!a.modulus.empty()) modulus = parse_int_list(a.modulus);
    auto F = Field::make(p, static_cast<int>(k), modulus);
    if (a.omega.empty()) return F;
    std::string w = detail::strip_ws(a.omega);
    if (w == "w" || w.rfind("w^", 0) == 0) throw Error("--omega must be given in coefficient form or as an integer");
    return Field::make(p, static_cast<int>(k), F->modulus(), parse_elem(*F, w));
}

i64 need_d(const FieldArgs& a) {
    if (!a.d) throw Error("--d is required");
    if (*a.d < 1) throw Error("--d must be positive");
    return *a.d;
}

CycloContext build_context(const FieldArgs& a) {
    auto F = build_field(a);
    i64 d = need_d(a);
    auto ctx = CycloContext::make(F, d);
    if (a.m && *a.m != ctx.m) throw Error("--m disagrees with (q-1)/d");
    return ctx;
}

// (d, m) from --d with --m, or with --q (m = (q-1)/d).
std::pair<i64, i64> resolve_dm(const FieldArgs& a) {
    i64 d = need_d(a);
    std::optional<i64> m = a.m;
    if (a.q || a.p) {
        i64 q = a.q ? *a.q : ipow(*a.p, static_cast<int>(a.k.value_or(1)));
        if (a.p && a.q && q != ipow(*a.p, static_cast<int>(a.k.value_or(1)))) throw Error("--q disagrees with --p/--k");
        if ((q - 1) % d != 0) throw Error("d must divide q-1");
        if (m && *m != (q - 1) / d) throw Error("--m disagrees with (q-1)/d");
        m = (q - 1) / d;
    }
    if (!m) throw Error("need --m or --q");
    if (*m < 1) throw Error("--m must be positive");
    return {d, *m};
}

i64 resolve_m(const FieldArgs& a) {
    if (a.q) {
        i64 d = a.d.value_or(1);
        i64 m = (*a.q - 1) / d;
        if ((*a.q - 1) % d != 0 || (a.m && *a.m != m)) throw Error("--m disagrees with (q-1)/d");
        return m;
    }
    if (!a.m || *a.m < 1) throw Error("--m must be a positive integer");
    return *a.m;
}

Json wreath_report(const PermutationAnalysis& pa) {
    Json j;
    auto gc = iota_omega_inverse(pa.form, pa.psi);
    auto gz = wreath_c_to_z(gc);
    j["psi"] = format_perm(pa.psi);
    j["wreath"] = format_wreath(gz);
    j["wreath_c"] = format_wreath_c(gc);
    j["cycle_type"] = format_cycle_type(cycle_type_wreath(gz));
    return j;
}

// ---- subcommands ----------------------------------------------------------------

Envelope cmd_analyze(const FieldArgs& fa, const std::string& poly, bool verify) {
    Envelope env{"analyze"};
    auto ctx = build_context(fa);
    auto P = parse_poly(ctx.F, poly);
    auto form = poly_to_cyclotomic(P, ctx);
    if (!form.ok()) {
        env.status = Status::Rejected;
        env.payload["reason"] = std::string(reason_code(form.reason));
        return env;
    }
    env.payload["form"] = format_form(*form);
    auto pa = analyze_form(*form);
    env.payload["permutation"] = pa.ok();
    if (!pa.ok()) {
        env.payload["reason"] = std::string(reason_code(pa.reason));
        return env;
    }
    env.payload.update(wreath_report(*pa));
    if (verify) {
        auto ex = materialize(*form);
        bool ok = format_cycle_type(cycle_type_of(ex)) == env.payload["cycle_type"].get<std::string>();
        env.payload["verified"] = ok;
        if (!ok) env.status = Status::Error;
    }
    return env;
}

Envelope cmd_invert(const FieldArgs& fa, const std::string& poly, bool check) {
    Envelope env{"invert"};
    auto ctx = build_context(fa);
    auto P = parse_poly(ctx.F, poly);
    auto pa = analyze_permutation(P, ctx);
    if (!pa.ok()) {
        env.status = Status::Error;
        env.payload["reason"] = std::string(reason_code(pa.reason));
        env.payload["message"] = "input is not a permutation";
        return env;
    }
    auto inv = invert_permutation(pa->form);
    env.payload["inverse"] = format_poly(inv);
    if (check) {
        bool ok = true;
        const auto& F = *ctx.F;
        for (i64 v = 0; v < F.q() && ok; ++v) {
            Elem x{static_cast<std::uint32_t>(v)};
            ok = inv.eval(P.eval(x)) == x && P.eval(inv.eval(x)) == x;
        }
        env.payload["check"] = ok ? "identity" : "failed";
        if (!ok) env.status = Status::Error;
    }
    return env;
}

Envelope cmd_to_poly(const FieldArgs& fa, const std::string& form_text, bool verify) {
    Envelope env{"to-poly"};
    auto ctx = build_context(fa);
    auto f = parse_form(ctx, form_text);
    auto P = cyclotomic_to_poly(f);
    env.payload["poly"] = format_poly(P);
    if (verify) {
        bool ok = true;
        for (i64 v = 0; v < ctx.F->q() && ok; ++v) {
            Elem x{static_cast<std::uint32_t>(v)};
            ok = P.eval(x) == f.eval(x);
        }
        env.payload["verified"] = ok;
        if (!ok) env.status = Status::Error;
    }
    return env;
}

Envelope cmd_cycle_index(const FieldArgs& fa, const std::string& group, const std::string& base, bool verify, u64 cap) {
    Envelope env{"cycle-index"};
    CycleIndex ci;
    std::function<CycleIndex()> brute;
    env.payload["group"] = group;
    if (group == "gcp" || group == "cp" || group == "focp" || group == "wreath-brute") {
        auto [d, m] = resolve_dm(fa);
        env.payload["d"] = d;
        env.payload["m"] = m;
        if (group == "wreath-brute") {
            GroupKind kind = base == "hol" ? GroupKind::W : base == "reg" ? GroupKind::W1 : base == "eq" ? GroupKind::Weq
                                                                                                        : throw Error("--base must be hol, reg or eq");
            env.payload["base"] = base;
            ci = ci_brute(kind, static_cast<int>(d), m, cap);
        } else {
            GroupKind kind = group == "gcp" ? GroupKind::W : group == "focp" ? GroupKind::W1 : GroupKind::Weq;
            ci = group == "gcp" ? ci_gcp(d, m) : group == "focp" ? ci_focp(d, m) : ci_cp(d, m);
            brute = [kind, d = d, m = m, cap] { return ci_brute(kind, static_cast<int>(d), m, cap); };
        }
    } else if (group == "hol" || group == "reg") {
        i64 m = resolve_m(fa);
        env.payload["m"] = m;
        ci = group == "hol" ? ci_hol(m) : ci_regular(m);
        brute = group == "hol" ? std::function<CycleIndex()>([m, cap] { return ci_brute_hol(m, cap); })
                               : std::function<CycleIndex()>([m] { return ci_brute_regular(m); });
    } else if (group == "sym") {
        i64 d = need_d(fa);
        if (verify && d > 10) throw Error("sym brute force is limited to d <= 10");
        env.payload["d"] = d;
        ci = ci_sym(d);
        brute = [d] { return ci_brute_sym(static_cast<int>(d)); };
    } else {
        throw Error("unknown group '" + group + "'");
    }
    env.payload["terms"] = ci.size();
    env.payload["cycle_index"] = format_cycle_index(ci);
    if (verify && brute) {
        bool ok = brute() == ci;
        env.payload["verified"] = ok;
        if (!ok) env.status = Status::Error;
    }
    return env;
}

RepKind parse_rep_kind(const std::string& s) {
    if (s == "long-cycle") return RepKind::LongCycle;
    if (s == "involution") return RepKind::Involution;
    throw Error("--kind must be long-cycle or involution");
}

Envelope cmd_reps(const FieldArgs& fa, const std::string& group, const std::string& kind_text, bool verify, u64 cap) {
    Envelope env{"reps"};
    RepKind kind = parse_rep_kind(kind_text);
    env.payload["group"] = group;
    env.payload["kind"] = kind_text;
    GroupKind wg;
    Json reps = Json::array();
    i64 d = 0, m = 0;
    if (group == "gcp" || group == "cp" || group == "focp") {
        FieldGroup fg = group == "gcp" ? FieldGroup::GCP : group == "cp" ? FieldGroup::CP : FieldGroup::FOCP;
        auto ctx = build_context(fa);
        d = ctx.d;
        m = ctx.m;
        wg = wreath_group_of(fg);
        for (auto& f : reps_as_cyclotomic(fg, kind, ctx)) reps.push_back(format_form(f));
    } else if (group == "w" || group == "w1" || group == "weq") {
        std::tie(d, m) = resolve_dm(fa);
        wg = group == "w" ? GroupKind::W : group == "w1" ? GroupKind::W1 : GroupKind::Weq;
        if (d > 64) throw Error("--d too large");
        for (auto& g : rep_system(wg, kind, static_cast<int>(d), m)) reps.push_back(format_wreath(g));
    } else {
        throw Error("unknown group '" + group + "'");
    }
    env.payload["d"] = d;
    env.payload["m"] = m;
    env.payload["count"] = reps.size();
    if (verify) {
        auto R = verify_rep_system(wg, kind, static_cast<int>(d), m, cap);
        env.payload["verified"] = R.ok();
        env.payload["classes"] = R.classes;
        if (!R.ok()) {
            env.payload["detail"] = R.detail;
            env.status = Status::Error;
        }
    }
    env.payload["reps"] = reps;
    return env;
}

Envelope cmd_conjugate(const std::string& group, const std::string& g_text, const std::string& h_text,
                       std::optional<i64> m, bool verify, u64 cap) {
    Envelope env{"conjugate"};
    env.payload["group"] = group;
    bool verdict = false;
    std::string reason;
    std::optional<bool> brute;
    if (group == "hol") {
        auto g = parse_affine(g_text, m), h = parse_affine(h_text, m);
        if (g.m != h.m) throw Error("elements have different moduli");
        verdict = hol_conjugate(g, h);
        if (!verdict) reason = "class-invariant";
        if (verify) brute = hol_conjugate_brute(g, h);
    } else {
        GroupKind kind = group == "w" ? GroupKind::W : group == "w1" ? GroupKind::W1 : group == "weq" ? GroupKind::Weq
                                                                                                     : throw Error("unknown group '" + group + "'");
        auto g = parse_wreath(g_text, m), h = parse_wreath(h_text, m);
        auto v = wreath_conjugate_verdict(g, h, kind);
        verdict = v.conjugate;
        reason = v.reason;
        if (verify) brute = conjugate_brute(g, h, kind, cap);
    }
    env.payload["conjugate"] = verdict;
    if (!verdict) env.payload["reason"] = reason;
    if (brute) {
        env.payload["verified"] = *brute == verdict;
        if (*brute != verdict) env.status = Status::Error;
    }
    return env;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized cyclotomic permutations: forms, cycle indices and conjugacy"};
    app.require_subcommand(1);
    std::string format = "text";
    bool verify = false, check = false;
    u64 cap = kDefaultEnumerationCap;
    FieldArgs fa;
    std::string poly, form, group, kind = "long-cycle", base = "hol", g_text, h_text;
    std::optional<i64> conj_m;

    auto common = [&](CLI::App* c) {
        c->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
        c->add_flag("--verify", verify, "cross-check with the brute-force oracle");
        c->add_option("--cap", cap, "enumeration cap for brute-force checks");
    };

    auto* analyze = app.add_subcommand("analyze", "analyze a polynomial");
    add_field_flags(analyze, fa);
    add_shape_flags(analyze, fa);
    analyze->add_option("--poly", poly)->required();
    common(analyze);

    auto* invert = app.add_subcommand("invert", "inverse of a permutation polynomial");
    add_field_flags(invert, fa);
    add_shape_flags(invert, fa);
    invert->add_option("--poly", poly)->required();
    invert->add_flag("--check", check, "verify the composition is the identity");
    common(invert);

    auto* to_poly = app.add_subcommand("to-poly", "cyclotomic form to polynomial form");
    add_field_flags(to_poly, fa);
    add_shape_flags(to_poly, fa);
    to_poly->add_option("--form", form)->required();
    common(to_poly);

    auto* cycle_index = app.add_subcommand("cycle-index", "cycle index of a permutation group");
    add_field_flags(cycle_index, fa);
    add_shape_flags(cycle_index, fa);
    cycle_index->add_option("--group", group)->required();
    cycle_index->add_option("--base", base, "base group for wreath-brute: hol, reg or eq");
    common(cycle_index);

    auto* reps = app.add_subcommand("reps", "conjugacy class representatives");
    add_field_flags(reps, fa);
    add_shape_flags(reps, fa);
    reps->add_option("--group", group)->required();
    reps->add_option("--kind", kind, "long-cycle or involution");
    common(reps);

    auto* conjugate = app.add_subcommand("conjugate", "conjugacy test");
    conjugate->set_help_flag("--help", "print this help message and exit");
    conjugate->add_option("--group", group)->required();
    conjugate->add_option("--g", g_text)->required();
    conjugate->add_option("--h", h_text)->required();
    conjugate->add_option("--m", conj_m, "modulus for elements written without @m");
    common(conjugate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    Envelope env;
    try {
        if (analyze->parsed()) env = cmd_analyze(fa, poly, verify);
        else if (invert->parsed()) env = cmd_invert(fa, poly, check || verify);
        else if (to_poly->parsed()) env = cmd_to_poly(fa, form, verify);
        else if (cycle_index->parsed()) env = cmd_cycle_index(fa, group, base, verify, cap);
        else if (reps->parsed()) env = cmd_reps(fa, group, kind, verify, cap);
        else env = cmd_conjugate(group, g_text, h_text, conj_m, verify, cap);
    } catch (const std::exception& e) {
        env.command = app.get_subcommands().front()->get_name();
        env.status = Status::Error;
        env.payload = Json::object();
        env.payload["message"] = e.what();
    }
    emit(env, format);
    return env.exit_code();
}
