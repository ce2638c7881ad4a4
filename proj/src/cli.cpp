#include "innerpost/cli.hpp"

#include "innerpost/document.hpp"
#include "innerpost/group_obstruction.hpp"
#include "innerpost/lie_tower.hpp"
#include "innerpost/report.hpp"
#include "innerpost/search.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <optional>

namespace innerpost {

namespace {

struct Options {
    std::string input;
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> depth;
    std::size_t cap = 10'000'000;
    bool canonical = false;
    std::string file_a, file_b;
    std::size_t samples = 500;
    std::vector<std::string> bases;
};

// Thrown by handlers to stop with a given exit code after filling the report.
struct Stop {
    int code;
};

std::string e(std::size_t i) { return "e" + std::to_string(i + 1); }

Document load(const std::string& path, Report& report) {
    try {
        return load_document(path);
    } catch (const ParseError& err) {
        report.verdict("parse", false,
                       path + ":" + std::to_string(err.line()) + ": " + to_string(err.category()) + " error: " +
                           err.message());
        report.data()["error"] = {{"file", path},
                                  {"line", err.line()},
                                  {"category", to_string(err.category())},
                                  {"message", err.message()}};
        throw Stop{exit_code::parse};
    } catch (const std::runtime_error& err) {
        report.verdict("parse", false, err.what());
        throw Stop{exit_code::parse};
    }
}

[[noreturn]] void wrong_kind(Report& report, const Document& doc, const std::string& expected) {
    report.verdict("kind", false, std::string("expected ") + expected + ", got " + kind_name(doc));
    throw Stop{exit_code::parse};
}

const LieAlgebra& lie_of(const Document& doc, Report& report) {
    if (auto d = std::get_if<LieDocument>(&doc))
        return d->lie;
    if (auto d = std::get_if<PostLieDocument>(&doc))
        return d->post.base();
    if (auto d = std::get_if<RbLieDocument>(&doc))
        return d->lie;
    wrong_kind(report, doc, "a Lie document (lie, postlie or rb-lie)");
}

const FiniteGroup& group_of(const Document& doc, Report& report) {
    if (auto d = std::get_if<GroupDocument>(&doc))
        return d->group;
    if (auto d = std::get_if<PostGroupDocument>(&doc))
        return d->post.base();
    if (auto d = std::get_if<RbGroupDocument>(&doc))
        return d->group;
    wrong_kind(report, doc, "a group document (group, postgroup or rb-group)");
}

void require_jacobi(const LieAlgebra& lie, Report& report, const std::string& label) {
    const auto v = jacobi_violations(lie);
    if (v.empty()) {
        report.verdict(label, true);
        return;
    }
    const auto& f = v.front();
    report.verdict(label, false,
                   "[[" + e(f.i) + "," + e(f.j) + "]," + e(f.k) + "] + cyclic = " + render_vector(f.residual) + " (" +
                       std::to_string(v.size()) + " triples fail)");
    throw Stop{exit_code::axiom};
}

// Post-Lie structure from a postlie or rb-lie document.
PostLieAlgebra postlie_of(const Document& doc, Report& report, std::optional<LinearMap>* phi = nullptr) {
    if (auto d = std::get_if<PostLieDocument>(&doc)) {
        if (phi)
            *phi = d->phi;
        return d->post;
    }
    if (auto d = std::get_if<RbLieDocument>(&doc)) {
        require_jacobi(d->lie, report, "jacobi");
        const bool rb = check_rota_baxter(d->lie, d->r);
        report.verdict("rota-baxter", rb, rb ? "" : "[Rx,Ry] != R([Rx,y]+[x,Ry]+[x,y]) for some basis pair");
        if (!rb)
            throw Stop{exit_code::axiom};
        return from_rota_baxter(d->lie, d->r);
    }
    wrong_kind(report, doc, "postlie or rb-lie");
}

void require_postlie_axioms(const PostLieAlgebra& post, Report& report) {
    const PostLieReport axioms = check_postlie_axioms(post);
    if (axioms.valid()) {
        report.verdict("post-lie axioms", true);
        return;
    }
    auto list = nlohmann::ordered_json::array();
    for (const auto& v : axioms.violations)
        if (list.size() < 20)
            list.push_back("axiom " + std::to_string(v.axiom) + " at (" + e(v.i) + "," + e(v.j) + "," + e(v.k) +
                           "): residual " + render_vector(v.residual));
    const auto& f = axioms.violations.front();
    report.verdict("post-lie axioms", false,
                   "axiom " + std::to_string(f.axiom) + " fails at (" + e(f.i) + "," + e(f.j) + "," + e(f.k) +
                       "), residual " + render_vector(f.residual) + " (" + std::to_string(axioms.violations.size()) +
                       " violations)");
    report.data()["violations"] = list;
    throw Stop{exit_code::axiom};
}

nlohmann::ordered_json brackets_json(const LieAlgebra& lie) {
    auto out = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < lie.dim(); ++i)
        for (std::size_t j = i + 1; j < lie.dim(); ++j)
            if (!is_zero(lie.bracket_basis(i, j)))
                out.push_back("[" + e(i) + "," + e(j) + "] = " + render_vector(lie.bracket_basis(i, j)));
    return out;
}

// ---------------------------------------------------------------------------

int cmd_check_lie(const Options& o, Report& report) {
    const Document doc = load(o.input, report);
    const LieAlgebra& lie = lie_of(doc, report);
    report.verdict("antisymmetry", true, "enforced while parsing");
    report.data()["dim"] = lie.dim();
    report.data()["brackets"] = brackets_json(lie);
    require_jacobi(lie, report, "jacobi");
    report.data()["center"] = to_json(center(lie));
    report.data()["semisimple"] = killing_semisimple(lie).semisimple;
    report.data()["complete"] = is_complete(lie);
    report.data()["fingerprint"] = invariant_fingerprint(lie).to_string();
    return exit_code::ok;
}

int cmd_check_postlie(const Options& o, Report& report) {
    const Document doc = load(o.input, report);
    const PostLieAlgebra post = postlie_of(doc, report);
    require_jacobi(post.base(), report, "base jacobi");
    require_postlie_axioms(post, report);
    const LieAlgebra sub = sub_adjacent(post);
    require_jacobi(sub, report, "sub-adjacent jacobi");
    const Subspace z = center(post.base());
    bool stable = true;
    for (std::size_t i = 0; i < post.dim() && stable; ++i)
        for (const auto& v : z.basis())
            stable = stable && z.contains(post.product(basis_vector(post.dim(), i), v));
    report.verdict("center stable under left multiplication", stable);
    report.data()["sub_adjacent"] = brackets_json(sub);
    report.data()["sub_adjacent_fingerprint"] = invariant_fingerprint(sub).to_string();
    return stable ? exit_code::ok : exit_code::axiom;
}

int cmd_innerness(const Options& o, Report& report) {
    const Document doc = load(o.input, report);
    const PostLieAlgebra post = postlie_of(doc, report);
    require_jacobi(post.base(), report, "base jacobi");
    require_postlie_axioms(post, report);
    if (const auto outer = first_outer_index(post)) {
        report.verdict("inner", false, "L(" + e(*outer) + ") is not an inner derivation");
        return exit_code::not_inner;
    }
    const LinearMap phi = *innerness_witness(post);
    report.verdict("inner", true);
    report.verdict("witness", is_inner_witness(post, phi), "[phi(x), y] = x |> y on all basis pairs");
    report.data()["witness"] = to_json(phi);
    return exit_code::ok;
}

int cmd_obstruction(const Options& o, Report& report) {
    const Document doc = load(o.input, report);
    std::optional<LinearMap> phi;
    const PostLieAlgebra post = postlie_of(doc, report, &phi);
    if (o.canonical)
        phi.reset();
    require_jacobi(post.base(), report, "base jacobi");
    require_postlie_axioms(post, report);
    if (phi && !is_inner_witness(post, *phi)) {
        report.verdict("supplied witness", false, "[phi(x), y] differs from x |> y");
        return exit_code::axiom;
    }
    const LieObstructionResult res = construct_rb_from_obstruction(post, phi);
    report.data()["status"] = to_string(res.status);
    if (res.status == ObstructionStatus::not_inner) {
        report.verdict("inner", false, "L(" + e(*res.outer_index) + ") is not an inner derivation");
        return exit_code::not_inner;
    }
    report.verdict("inner", true);
    report.data()["witness_source"] = phi ? "document" : "canonical";
    report.data()["witness"] = to_json(*res.witness);
    report.data()["kappa"] = to_json(*res.kappa);
    const LieAlgebra sub = sub_adjacent(post);
    report.verdict("kappa is a 2-cocycle", verify_lie_2cocycle(*res.kappa, sub));
    if (res.status == ObstructionStatus::nontrivial_class) {
        report.verdict("class trivial", false,
                       "no t: g -> Z(g) with kappa(x,y) = -t([x,y]_sub); the linear system is inconsistent");
        return exit_code::class_nontrivial;
    }
    report.verdict("class trivial", true);
    report.data()["t"] = to_json(*res.t);
    report.data()["R"] = to_json(*res.rota_baxter);
    report.verdict("R = phi - t is Rota-Baxter", check_rota_baxter(post.base(), *res.rota_baxter));
    report.verdict("R reproduces the product", from_adjoint_map(post.base(), *res.rota_baxter) == post);
    return report.all_pass() ? exit_code::ok : exit_code::axiom;
}

int cmd_tower(const Options& o, Report& report) {
    const Document doc = load(o.input, report);
    const auto* d = std::get_if<RbLieDocument>(&doc);
    if (!d)
        wrong_kind(report, doc, "rb-lie");
    require_jacobi(d->lie, report, "jacobi");
    if (!check_rota_baxter(d->lie, d->r)) {
        report.verdict("rota-baxter", false, "R is not a Rota-Baxter operator");
        return exit_code::axiom;
    }
    report.verdict("rota-baxter", true);
    LieTower tower;
    try {
        tower = build_tower(d->lie, d->r, o.depth.value_or(d->lie.dim()));
    } catch (const std::exception& err) {
        report.verdict("tower", false, err.what());
        return exit_code::axiom;
    }
    const LieTowerReport tr = tower_report(tower);
    auto levels = nlohmann::ordered_json::array();
    bool ok = true;
    for (std::size_t i = 0; i < tr.levels.size(); ++i) {
        const auto& lr = tr.levels[i];
        ok = ok && lr.jacobi;
        report.verdict("level " + std::to_string(i) + " jacobi", lr.jacobi);
        if (i > 0)
            report.verdict("level " + std::to_string(i) + ": R, R+id homomorphisms to level " + std::to_string(i - 1),
                           true);
        nlohmann::ordered_json l;
        l["level"] = i;
        l["brackets"] = brackets_json(tower.levels[i]);
        l["fingerprint"] = lr.fingerprint.to_string();
        l["semisimple"] = lr.semisimple;
        l["rank_R^i"] = lr.rank_r_power;
        l["rank_(R+id)^i"] = lr.rank_r_plus_id_power;
        l["certificate"] = to_string(lr.certificate);
        levels.push_back(l);
    }
    report.data()["levels"] = levels;
    if (!tr.levels.empty()) {
        report.data()["im R + im(R+id) = g"] = tr.levels.front().images_span;
        report.data()["ker R meet ker(R+id) = 0"] = tr.levels.front().kernels_meet_trivially;
        report.data()["im R meet im(R+id) = im R(R+id)"] = tr.levels.front().image_intersection_identity;
    }
    report.data()["fingerprints_agree"] = tr.fingerprints_agree;
    return ok ? exit_code::ok : exit_code::axiom;
}

// ---------------------------------------------------------------------------

std::string names_of(const FiniteGroup& g, const std::vector<Element>& xs) {
    std::string s = "{";
    for (std::size_t k = 0; k < xs.size(); ++k)
        s += (k ? ", " : "") + g.name(xs[k]);
    return s + "}";
}

std::string row_of(const FiniteGroup& g, const GroupMap& f) {
    std::string s;
    for (Element a = 0; a < f.size(); ++a)
        s += (a ? " " : "") + g.name(f[a]);
    return s;
}

int cmd_check_group(const Options& o, Report& report) {
    const Document doc = load(o.input, report);
    const FiniteGroup& g = group_of(doc, report);
    report.verdict("group axioms", check_group(g), "checked while parsing");
    const auto z = center_group(g);
    report.data()["order"] = g.order();
    report.data()["identity"] = g.name(g.identity());
    report.data()["center"] = names_of(g, z);
    report.data()["center_invariant_factors"] = abelian_decomposition(g, z).invariant_factors();
    return exit_code::ok;
}

PostGroup postgroup_of(const Document& doc, Report& report, std::optional<GroupMap>* phi = nullptr) {
    if (auto d = std::get_if<PostGroupDocument>(&doc)) {
        if (phi)
            *phi = d->phi;
        return d->post;
    }
    if (auto d = std::get_if<RbGroupDocument>(&doc)) {
        const bool rb = check_rb_group(d->group, d->b);
        report.verdict("rota-baxter", rb, rb ? "" : "B(a)B(b) != B(a Ad_{B(a)} b) for some pair");
        if (!rb)
            throw Stop{exit_code::axiom};
        return from_rb_group(d->group, d->b);
    }
    wrong_kind(report, doc, "postgroup or rb-group");
}

void require_postgroup_axioms(const PostGroup& pg, Report& report) {
    const PostGroupReport axioms = check_postgroup_axioms(pg);
    if (axioms.valid()) {
        report.verdict("post-group axioms", true);
        return;
    }
    const FiniteGroup& g = pg.base();
    auto describe = [&](const PostGroupViolation& v) {
        if (v.axiom == 0)
            return "L(" + g.name(v.a) + ") is not a bijection";
        return "axiom " + std::to_string(v.axiom) + " fails at (" + g.name(v.a) + "," + g.name(v.b) + "," +
               g.name(v.c) + ")";
    };
    auto list = nlohmann::ordered_json::array();
    for (const auto& v : axioms.violations)
        if (list.size() < 20)
            list.push_back(describe(v));
    report.verdict("post-group axioms", false,
                   describe(axioms.violations.front()) + " (" + std::to_string(axioms.violations.size()) +
                       " violations)");
    report.data()["violations"] = list;
    throw Stop{exit_code::axiom};
}

int cmd_check_postgroup(const Options& o, Report& report) {
    const Document doc = load(o.input, report);
    const PostGroup pg = postgroup_of(doc, report);
    require_postgroup_axioms(pg, report);
    const FiniteGroup circ = sub_adjacent_group(pg);
    const auto cv = find_group_violation(circ);
    report.verdict("sub-adjacent group", !cv, cv ? cv->what : "");
    const FiniteGroup& g = pg.base();
    const auto z = center_group(g);
    bool central = true;
    std::string where;
    for (Element a = 0; a < g.order() && central; ++a)
        for (Element c : z)
            if (!std::binary_search(z.begin(), z.end(), pg.act(a, c))) {
                central = false;
                where = g.name(a) + " |> " + g.name(c) + " = " + g.name(pg.act(a, c));
                break;
            }
    report.verdict("center stable under left multiplication", central, where);
    report.data()["sub_adjacent_table"] = table_json(circ);
    return report.all_pass() ? exit_code::ok : exit_code::axiom;
}

nlohmann::ordered_json omega_json(const FiniteGroup& g, const GroupTwoCocycle& omega) {
    auto out = nlohmann::ordered_json::array();
    for (Element a = 0; a < g.order(); ++a) {
        std::string row;
        for (Element b = 0; b < g.order(); ++b)
            row += (b ? " " : "") + g.name(omega.value(a, b));
        out.push_back(row);
    }
    return out;
}

int cmd_group_obstruction(const Options& o, Report& report) {
    const Document doc = load(o.input, report);
    std::optional<GroupMap> phi;
    const PostGroup pg = postgroup_of(doc, report, &phi);
    if (o.canonical)
        phi.reset();
    require_postgroup_axioms(pg, report);
    const FiniteGroup& g = pg.base();
    if (phi && !is_inner_witness_group(pg, *phi)) {
        report.verdict("supplied witness", false, "Ad_{phi(a)} differs from L(a), or phi(e) != e");
        return exit_code::axiom;
    }
    const GroupObstructionResult res = construct_rb_from_obstruction_group(pg, phi);
    report.data()["status"] = to_string(res.status);
    if (res.status == GroupObstructionStatus::not_inner) {
        report.verdict("inner", false, "L(" + g.name(*res.outer_element) + ") is not an inner automorphism");
        return exit_code::not_inner;
    }
    report.verdict("inner", true);
    const FiniteGroup circ = sub_adjacent_group(pg);
    report.data()["witness_source"] = phi ? "document" : "canonical";
    report.data()["witness"] = row_of(g, *res.witness);
    report.data()["center"] = names_of(g, res.omega->center());
    report.data()["center_invariant_factors"] = res.omega->decomposition().invariant_factors();
    report.data()["omega"] = omega_json(g, *res.omega);
    const auto bad = find_group_2cocycle_violation(*res.omega, circ);
    report.verdict("omega is a 2-cocycle", !bad,
                   bad ? "fails at (" + g.name((*bad)[0]) + "," + g.name((*bad)[1]) + "," + g.name((*bad)[2]) + ")"
                       : "");
    report.data()["pullback_order"] = pullback_group(pg).group.order();
    if (res.status == GroupObstructionStatus::nontrivial_class) {
        report.verdict("class trivial", false,
                       "the congruences zeta(a) + zeta(b) - zeta(a o b) = omega(a,b) have no solution over Z(G)");
        return exit_code::class_nontrivial;
    }
    report.verdict("class trivial", true);
    report.data()["zeta"] = row_of(g, *res.zeta);
    report.data()["B"] = row_of(g, *res.rota_baxter);
    report.verdict("B = Phi zeta is Rota-Baxter", check_rb_group(g, *res.rota_baxter));
    report.verdict("B reproduces the product", from_rb_group(g, *res.rota_baxter) == pg);
    return report.all_pass() ? exit_code::ok : exit_code::axiom;
}

int cmd_group_tower(const Options& o, Report& report) {
    const Document doc = load(o.input, report);
    const auto* d = std::get_if<RbGroupDocument>(&doc);
    if (!d)
        wrong_kind(report, doc, "rb-group");
    if (!check_rb_group(d->group, d->b)) {
        report.verdict("rota-baxter", false, "B is not a Rota-Baxter operator");
        return exit_code::axiom;
    }
    const std::size_t depth = o.depth.value_or(3);
    const GroupTower tower = group_tower(d->group, d->b, depth);
    auto levels = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < tower.levels.size(); ++i) {
        const auto& r = tower.reports[i];
        const std::string tag = "level " + std::to_string(i);
        report.verdict(tag + " group", r.is_group);
        report.verdict(tag + " B Rota-Baxter", r.rota_baxter);
        nlohmann::ordered_json l;
        l["level"] = i;
        l["table"] = table_json(tower.levels[i]);
        if (i > 0) {
            report.verdict(tag + " B homomorphism to level " + std::to_string(i - 1), r.b_hom);
            report.verdict(tag + " a -> a o_{i-1} B(a) homomorphism", r.tilde_level_hom);
            l["a -> a . B(a) homomorphism"] = r.tilde_literal_hom;
        }
        levels.push_back(l);
    }
    report.data()["levels"] = levels;
    if (tower.levels.size() != depth + 1)
        report.verdict("depth reached", false, "stopped at level " + std::to_string(tower.levels.size() - 1));
    return report.all_pass() ? exit_code::ok : exit_code::axiom;
}

int cmd_enumerate_rb(const Options& o, Report& report) {
    const Document doc = load(o.input, report);
    const FiniteGroup& g = group_of(doc, report);
    std::vector<GroupMap> ops;
    try {
        ops = enumerate_rb_operators(g, o.cap);
    } catch (const EnumerationCapExceeded& err) {
        report.verdict("enumeration", false, err.what());
        return exit_code::failure;
    }
    report.verdict("enumeration", true, "complete");
    report.data()["count"] = ops.size();
    auto list = nlohmann::ordered_json::array();
    for (const auto& b : ops)
        list.push_back(row_of(g, b));
    report.data()["operators"] = list;
    return exit_code::ok;
}

int cmd_diff_cocycle(const Options& o, Report& report) {
    const Document a = load(o.file_a, report);
    const Document b = load(o.file_b, report);
    const auto* la = std::get_if<RbLieDocument>(&a);
    const auto* lb = std::get_if<RbLieDocument>(&b);
    if (la && lb) {
        if (!(la->lie == lb->lie)) {
            report.verdict("same algebra", false, "the two documents have different brackets");
            return exit_code::parse;
        }
        const LieDifference diff = rb_difference_cocycle(la->lie, la->r, lb->r);
        report.verdict("difference cocycle", diff.t.has_value(), diff.diagnostic);
        if (!diff.t)
            return exit_code::failure;
        report.data()["t"] = to_json(*diff.t);
        return exit_code::ok;
    }
    const auto* ga = std::get_if<RbGroupDocument>(&a);
    const auto* gb = std::get_if<RbGroupDocument>(&b);
    if (ga && gb) {
        if (!(ga->group == gb->group)) {
            report.verdict("same group", false, "the two documents have different Cayley tables");
            return exit_code::parse;
        }
        const GroupDifference diff = rb_difference_cocycle_group(ga->group, ga->b, gb->b);
        report.verdict("difference cocycle", diff.zeta.has_value(), diff.diagnostic);
        if (!diff.zeta)
            return exit_code::failure;
        report.data()["zeta"] = row_of(ga->group, *diff.zeta);
        return exit_code::ok;
    }
    report.verdict("kind", false, std::string("expected two rb-lie or two rb-group documents, got ") + kind_name(a) +
                                      " and " + kind_name(b));
    return exit_code::parse;
}

int cmd_search(const Options& o, Report& report) {
    SearchOptions so;
    so.seed = o.seed;
    so.samples = o.samples;
    if (!o.bases.empty())
        so.bases = o.bases;
    SearchSummary s;
    try {
        s = search_obstructions(so);
    } catch (const std::invalid_argument& err) {
        report.verdict("bases", false, err.what());
        return exit_code::parse;
    }
    report.verdict("search terminated", true);
    report.data()["mode"] = o.seed ? "random (seed " + std::to_string(*o.seed) + ")" : std::string("grid");
    report.data()["bases"] = so.bases;
    report.data()["candidates"] = s.candidates;
    report.data()["post_lie"] = s.postlie;
    report.data()["induced"] = s.induced;
    report.data()["class_nontrivial"] = s.nontrivial;
    auto findings = nlohmann::ordered_json::array();
    for (const auto& f : s.findings)
        findings.push_back({{"base", f.base}, {"phi", to_json(f.phi)}, {"kappa", to_json(f.kappa)}});
    report.data()["findings"] = findings;
    return exit_code::ok;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for post-Lie algebras, post-groups and Rota-Baxter operators", "innerpost"};
    app.require_subcommand(1);
    Options o;

    using Handler = std::function<int(const Options&, Report&)>;
    std::map<CLI::App*, std::pair<std::string, Handler>> handlers;
    auto add = [&](const std::string& name, const std::string& help, Handler h, bool needs_input = true) {
        CLI::App* sub = app.add_subcommand(name, help);
        auto* in = sub->add_option("--input", o.input, "Input document");
        if (needs_input)
            in->required();
        sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
        sub->add_option("--seed", o.seed, "Seed for randomized harnesses");
        handlers[sub] = {name, std::move(h)};
        return sub;
    };

    add("check-lie", "Antisymmetry, Jacobi and invariants of a Lie algebra", cmd_check_lie);
    add("check-postlie", "Post-Lie axioms and the sub-adjacent bracket", cmd_check_postlie);
    add("innerness", "Decide innerness and print a witness phi", cmd_innerness);
    add("obstruction", "Obstruction cocycle, coboundary solve and Rota-Baxter reconstruction", cmd_obstruction)
        ->add_flag("--canonical", o.canonical, "Ignore a phi block and use the canonical witness");
    add("tower", "Rota-Baxter tower of a Lie algebra", cmd_tower)->add_option("--depth", o.depth, "Number of levels (default: the dimension)");
    add("check-group", "Group axioms and center", cmd_check_group);
    add("check-postgroup", "Post-group axioms and the sub-adjacent group", cmd_check_postgroup);
    add("group-obstruction", "Obstruction 2-cocycle and Rota-Baxter reconstruction for a post-group",
        cmd_group_obstruction)
        ->add_flag("--canonical", o.canonical, "Ignore a phi block and use the canonical witness");
    add("group-tower", "Rota-Baxter tower of a finite group", cmd_group_tower)
        ->add_option("--depth", o.depth, "Number of levels (default: 3)");
    add("enumerate-rb", "All Rota-Baxter operators on a finite group", cmd_enumerate_rb)
        ->add_option("--cap", o.cap, "Search node budget");
    CLI::App* diff = add("diff-cocycle", "Difference cocycle of two Rota-Baxter operators", cmd_diff_cocycle, false);
    diff->add_option("--a", o.file_a, "First rb-lie or rb-group document")->required();
    diff->add_option("--b", o.file_b, "Second document")->required();
    CLI::App* search = add("search", "Scan small inner post-Lie algebras for nontrivial obstruction classes",
                           cmd_search, false);
    search->add_option("--samples", o.samples, "Random draws per base algebra (with --seed)");
    search->add_option("--base", o.bases, "Base algebras to scan (default: heisenberg r2+k)");

    std::vector<const char*> argv{"innerpost"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run 'innerpost --help' for usage\n";
        return exit_code::parse;
    }

    for (auto& [sub, entry] : handlers) {
        if (!sub->parsed())
            continue;
        Report report(entry.first);
        int code;
        try {
            code = entry.second(o, report);
        } catch (const Stop& s) {
            code = s.code;
        } catch (const std::exception& ex) {
            report.verdict("internal", false, ex.what());
            code = exit_code::failure;
        }
        report.set_exit_code(code);
        out << (o.format == "machine" ? report.render_machine() : report.render_text());
        return code;
    }
    return exit_code::parse;
}

}  // namespace innerpost
