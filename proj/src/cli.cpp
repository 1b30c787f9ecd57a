#include "weilform/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weilform/json_io.hpp"

namespace weilform {

namespace {

json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        text = os.str();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open input file: " + path);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
}

void emit_report(const Report& report, const std::string& format) {
    if (format == "text") {
        for (const auto& r : report.records)
            std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name
                      << (r.details.empty() ? "" : "  -- " + r.details) << "\n";
        std::cout << (report.pass() ? "all checks pass" : "some checks FAILED") << "\n";
    } else {
        std::cout << report_to_json(report).dump(2) << "\n";
    }
}

void emit_json(const json& j, const std::string&) { std::cout << j.dump(2) << "\n"; }

int run_classify(const std::string& input, std::optional<long> weight_opt, const std::string& format) {
    json j = read_input(input);
    FrobeniusModule m = module_from_json(j);
    std::optional<long> w = weight_opt ? weight_opt : m.declared_weight();
    if (!w) throw InputError("classify: no weight declared and none supplied (--weight)");
    Report report;
    json extra;
    try {
        DualityVerdict v = classify_self_duality(m, *w);
        report.add("purity", true, "pure of weight " + std::to_string(*w));
        report.add("self-dual", v.self_dual,
                   v.self_dual ? "layer polynomials are weight-symmetric" : "not self-dual");
        extra = verdict_to_json(v);
    } catch (const PurityError& e) {
        report.add("purity", false, e.what());
    }
    json out = report_to_json(report);
    if (!extra.is_null()) out["verdict"] = extra;
    if (format == "text") {
        emit_report(report, format);
        if (!extra.is_null()) std::cout << extra.dump(2) << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return report.pass() ? 0 : 1;
}

int run_jordan(const std::string& input, const std::string& format) {
    FrobeniusModule m = module_from_json(read_input(input));
    json out;
    out["char_poly"] = poly_to_json(char_poly(m));
    json invf = json::array();
    for (const Poly& f : invariant_factors(m)) invf.push_back(poly_to_json(f));
    out["invariant_factors"] = invf;
    out["profile"] = profile_to_json(jordan_profile(m));
    emit_json(out, format);
    return 0;
}

int run_weights(const std::string& input, const std::string& format) {
    FrobeniusModule m = module_from_json(read_input(input));
    Report report;
    json weights = json::object();
    try {
        for (auto& [w, f] : weight_split(m)) weights[std::to_string(w)] = poly_to_json(f);
        report.add("weight split", true, "all inverse roots have integral weights");
    } catch (const NonIntegralWeightError& e) {
        report.add("weight split", false, e.what());
    }
    json out = report_to_json(report);
    out["weights"] = weights;
    emit_json(out, format);
    return report.pass() ? 0 : 1;
}

int run_monodromy(const std::string& input, const std::string& format) {
    NilpotentDatum nd = nilpotent_from_json(read_input(input));
    MonodromyFiltration f = monodromy_filtration(nd);
    json out;
    out["d"] = f.d;
    json graded = json::object(), prim = json::object(), steps = json::object();
    for (auto& [jdx, dim] : f.graded_dim) graded[std::to_string(jdx)] = dim;
    for (auto& [idx, dim] : f.primitive_dim) prim[std::to_string(idx)] = dim;
    for (auto& [idx, sub] : f.m) steps[std::to_string(idx)] = mat_to_json(sub.basis());
    out["graded_dim"] = graded;
    out["primitive_dim"] = prim;
    out["filtration"] = steps;
    if (nd.has_pairing()) {
        json grams = json::object();
        for (auto& [idx, dim] : f.primitive_dim) {
            if (dim == 0) continue;
            PrimitiveGram g = induced_primitive_gram(nd, idx);
            grams[std::to_string(idx)] = json{{"gram", mat_to_json(g.gram)},
                                              {"sign", g.expected_sign},
                                              {"invertible", g.invertible}};
        }
        out["primitive_grams"] = grams;
    }
    emit_json(out, format);
    return 0;
}

int run_witness(const std::string& blocks, int sign, const std::string& format) {
    std::vector<int> mult;
    std::stringstream ss(blocks);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw InputError("witness: blocks must be \"n:m,...\"");
        int n = std::stoi(item.substr(0, colon));
        int m = std::stoi(item.substr(colon + 1));
        if (n < 1 || m < 0) throw InputError("witness: block sizes must be >= 1, multiplicities >= 0");
        if (static_cast<size_t>(n) > mult.size()) mult.resize(static_cast<size_t>(n), 0);
        mult[static_cast<size_t>(n - 1)] += m;
    }
    LaWitness w = la_witness(mult, sign);
    json out;
    out["N"] = mat_to_json(w.n);
    if (w.pairing) {
        out["A"] = mat_to_json(*w.pairing);
        out["sign"] = sign;
        emit_json(out, format);
        return 0;
    }
    out["A"] = nullptr;
    out["violations"] = w.violations;
    emit_json(out, format);
    return 1;
}

VirtualWeilClass eval_kring(const json& expr, const std::map<std::string, VirtualWeilClass>& classes,
                            const Int& q);

VirtualWeilClass eval_arg(const json& expr, const std::map<std::string, VirtualWeilClass>& classes,
                          const Int& q, size_t i = 0) {
    if (!expr.contains("args") || expr.at("args").size() <= i)
        throw InputError("kring: operator needs argument " + std::to_string(i));
    return eval_kring(expr.at("args")[i], classes, q);
}

VirtualWeilClass eval_kring(const json& expr, const std::map<std::string, VirtualWeilClass>& classes,
                            const Int& q) {
    if (expr.is_string()) {
        auto it = classes.find(expr.get<std::string>());
        if (it == classes.end()) throw InputError("kring: unknown class " + expr.get<std::string>());
        return it->second;
    }
    std::string op = expr.at("op").get<std::string>();
    if (op == "class") {
        auto it = classes.find(expr.at("name").get<std::string>());
        if (it == classes.end()) throw InputError("kring: unknown class " + expr.at("name").get<std::string>());
        return it->second;
    }
    if (op == "unit") return VirtualWeilClass::unit(q);
    if (op == "add") return kr_add(eval_arg(expr, classes, q, 0), eval_arg(expr, classes, q, 1));
    if (op == "neg") return kr_neg(eval_arg(expr, classes, q));
    if (op == "tensor") return kr_tensor(eval_arg(expr, classes, q, 0), eval_arg(expr, classes, q, 1));
    if (op == "dual") return kr_dual(eval_arg(expr, classes, q));
    if (op == "dbar") return kr_dbar(eval_arg(expr, classes, q));
    if (op == "tate") return kr_tate(eval_arg(expr, classes, q), expr.at("n").get<long>());
    if (op == "adams") return kr_adams(eval_arg(expr, classes, q), expr.at("k").get<int>());
    if (op == "lambda") return kr_lambda(eval_arg(expr, classes, q), expr.at("m").get<int>());
    throw InputError("kring: unknown op " + op);
}

int run_kring(const std::string& input, const std::string& format) {
    json j = read_input(input);
    if (!j.contains("q")) throw InputError("kring: program needs \"q\"");
    Int q(j.at("q").get<long>());
    std::map<std::string, VirtualWeilClass> classes;
    if (j.contains("classes"))
        for (auto& [name, cj] : j.at("classes").items()) {
            json with_q = cj;
            if (!with_q.contains("q")) with_q["q"] = j.at("q");
            classes.emplace(name, class_from_json(with_q));
        }
    const json& prog = j.at("program");
    if (prog.contains("op") && prog.at("op") == "membership") {
        VirtualWeilClass x = eval_arg(prog, classes, q);
        MembershipReport r = kr_membership(x, prog.at("sigma").get<int>());
        emit_json(membership_to_json(r), format);
        return r.member ? 0 : 1;
    }
    VirtualWeilClass x = eval_kring(prog, classes, q);
    emit_json(class_to_json(x), format);
    return 0;
}

int run_indicator(const std::string& input, const std::string& format) {
    json j = read_input(input);
    FiniteGroup g = group_from_json(j.at("group"));
    GroupRep rep = rep_from_json(g, j);
    Rat nu = rep.fs_indicator();
    auto plus = find_nondegenerate_cyc(invariant_bilinear_space(rep, +1));
    auto minus = find_nondegenerate_cyc(invariant_bilinear_space(rep, -1));
    std::string cls = plus ? "orthogonal" : (minus ? "symplectic" : "not-self-dual");
    Report report;
    bool irr = rep.is_irreducible();
    if (irr) {
        bool match = (nu == 1 && plus && !minus) || (nu == -1 && !plus && minus) ||
                     (nu == 0 && !plus && !minus);
        report.add("indicator trichotomy", match,
                   "nu = " + rat_to_string(nu) + ", invariant forms say " + cls);
    } else {
        report.add("indicator computed", true, "nu = " + rat_to_string(nu) + " (representation reducible)");
    }
    json out = report_to_json(report);
    out["indicator"] = rat_to_string(nu);
    out["irreducible"] = irr;
    out["classification"] = cls;
    emit_json(out, format);
    return report.pass() ? 0 : 1;
}

int run_bg_lseries(const std::string& input, int terms, const std::string& format) {
    json j = read_input(input);
    FiniteGroup g = group_from_json(j.at("group"));
    GroupRep rep = rep_from_json(g, j);
    BgL2Series s = bg_l2_series(rep, terms);
    json out;
    json coeffs = json::array();
    for (const Rat& a : s.coefficients) coeffs.push_back(rat_to_string(a));
    out["coefficients"] = coeffs;
    out["pole_order"] = s.pole_order;
    out["closed_form"] = "(1-T)^(" + std::to_string(-s.pole_order) + ")";
    emit_json(out, format);
    return 0;
}

int run_chebotarev(const std::string& input, const std::string& format) {
    json j = read_input(input);
    FiniteGroup g = group_from_json(j.at("group"));
    std::vector<int> class_ids;
    if (j.contains("classes")) {
        for (const auto& c : j.at("classes")) class_ids.push_back(c.get<int>());
    } else if (j.contains("elements")) {
        // the listed elements must form a conjugation-closed set
        std::vector<bool> in_set(static_cast<size_t>(g.order()), false);
        for (const auto& ej : j.at("elements")) {
            Perm p;
            for (const auto& x : ej) p.push_back(x.get<int>() - 1);
            in_set[static_cast<size_t>(g.element_index(p))] = true;
        }
        std::vector<bool> class_seen(static_cast<size_t>(g.class_count()), false);
        for (long e = 0; e < g.order(); ++e) {
            if (!in_set[static_cast<size_t>(e)]) continue;
            int c = g.class_of(static_cast<int>(e));
            for (int member : g.conjugacy_class(c))
                if (!in_set[static_cast<size_t>(member)])
                    throw InputError("chebotarev: element set is not closed under conjugation");
            if (!class_seen[static_cast<size_t>(c)]) {
                class_seen[static_cast<size_t>(c)] = true;
                class_ids.push_back(c);
            }
        }
    } else {
        throw InputError("chebotarev: need \"classes\" or \"elements\"");
    }
    auto [lhs, rhs] = chebotarev_identity(g, class_ids);
    Report report;
    report.add("chebotarev identity", lhs == rhs,
               "sum 1/|Z| = " + rat_to_string(lhs) + ", |R|/|G| = " + rat_to_string(rhs));
    json out = report_to_json(report);
    out["lhs"] = rat_to_string(lhs);
    out["rhs"] = rat_to_string(rhs);
    emit_json(out, format);
    return report.pass() ? 0 : 1;
}

int run_ih_check(const std::string& input, const std::string& format, bool mixed) {
    IhInput in = ih_input_from_json(read_input(input));
    if (in.kind.empty()) in.kind = mixed ? "ordinary" : "intersection";
    Report report = mixed ? mixed_check(in) : ih_check(in);
    emit_report(report, format);
    return report.pass() ? 0 : 1;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv) {
    CLI::App app{"weilform: exact Frobenius symmetry and parity checks"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string input;
    std::optional<long> weight;
    int sign = -1;
    std::string blocks;
    int terms = 20;

    auto* classify = app.add_subcommand("classify", "self-duality verdict for a Frobenius module");
    classify->add_option("--input", input, "module JSON (default stdin)");
    long weight_value = 0;
    bool weight_set = false;
    classify->add_option("--weight", weight_value, "weight (overrides declared)")
        ->each([&](const std::string&) { weight_set = true; });

    auto* jordan = app.add_subcommand("jordan", "invariant factors and Jordan layers");
    jordan->add_option("--input", input, "module JSON (default stdin)");

    auto* weights = app.add_subcommand("weights", "weight split of the characteristic polynomial");
    weights->add_option("--input", input, "module JSON (default stdin)");

    auto* monodromy = app.add_subcommand("monodromy", "monodromy filtration and primitive parts");
    monodromy->add_option("--input", input, "nilpotent datum JSON (default stdin)");

    auto* witness = app.add_subcommand("witness", "pairing witness for a nilpotent block profile");
    witness->add_option("--blocks", blocks, "block multiplicities \"n:m,...\"")->required();
    witness->add_option("--sign", sign, "+1 symmetric / -1 alternating")->required();

    auto* kring = app.add_subcommand("kring", "evaluate a K-ring expression program");
    kring->add_option("--program,--input", input, "program JSON (default stdin)");

    auto* indicator = app.add_subcommand("indicator", "Frobenius-Schur indicator of a representation");
    indicator->add_option("--input", input, "representation JSON (default stdin)");

    auto* bg = app.add_subcommand("bg-lseries", "exact L^(2) series on BG");
    bg->add_option("--input", input, "representation JSON (default stdin)");
    bg->add_option("--terms", terms, "number of coefficients (default 20)");

    auto* cheb = app.add_subcommand("chebotarev", "exact Chebotarev identity on BG");
    cheb->add_option("--input", input, "group + classes JSON (default stdin)");

    auto* ihc = app.add_subcommand("ih-check", "intersection cohomology parity checks");
    ihc->add_option("--input", input, "cohomology data JSON (default stdin)");

    auto* mxc = app.add_subcommand("mixed-check", "ordinary cohomology virtual parity checks");
    mxc->add_option("--input", input, "cohomology data JSON (default stdin)");

    // global options may trail the subcommand
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed())
            return run_classify(input, weight_set ? std::optional<long>(weight_value) : std::nullopt, format);
        if (jordan->parsed()) return run_jordan(input, format);
        if (weights->parsed()) return run_weights(input, format);
        if (monodromy->parsed()) return run_monodromy(input, format);
        if (witness->parsed()) return run_witness(blocks, sign, format);
        if (kring->parsed()) return run_kring(input, format);
        if (indicator->parsed()) return run_indicator(input, format);
        if (bg->parsed()) return run_bg_lseries(input, terms, format);
        if (cheb->parsed()) return run_chebotarev(input, format);
        if (ihc->parsed()) return run_ih_check(input, format, false);
        if (mxc->parsed()) return run_ih_check(input, format, true);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}

}  // namespace weilform
