#include "blockspec/bounds.hpp"
#include "blockspec/charpoly.hpp"
#include "blockspec/enumeration.hpp"
#include "blockspec/io.hpp"
#include "blockspec/order.hpp"
#include "blockspec/spectral.hpp"
#include "blockspec/transforms.hpp"
#include "blockspec/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace blockspec;

namespace {

struct Common {
    std::string width = "1e-8";
    std::string format;
    int jobs = 0;
    std::string output;
};

int resolve_jobs(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("BLOCKSPEC_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

Rational resolve_width(const std::string& text) {
    Rational w = parse_rational(text);
    if (!(w > 0)) throw std::invalid_argument("--width must be positive");
    return w;
}

// "2,3,4", "1-6", "1..6" or a mix.
std::vector<int> parse_range(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        auto dots = part.find("..");
        auto dash = part.find('-', 1);
        if (dots != std::string::npos || dash != std::string::npos) {
            const auto cut = dots != std::string::npos ? dots : dash;
            const int lo = std::stoi(part.substr(0, cut));
            const int hi = std::stoi(part.substr(cut + (dots != std::string::npos ? 2 : 1)));
            if (lo > hi) throw std::invalid_argument("empty range " + part);
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(std::stoi(part));
        }
    }
    if (out.empty()) throw std::invalid_argument("empty range");
    return out;
}

class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot write " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

Json site_json(const SpecialBlockReport& s) {
    Json j{{"kind", to_string(s.kind)}};
    if (s.block) j["block"] = *s.block;
    j["attach"] = s.attach_vertices;
    return j;
}

int cmd_enumerate(int q, int b, bool codes, const Common& c) {
    Sink sink(c.output);
    const auto cls = enumerate_class(q, b, resolve_jobs(c.jobs));
    for (const auto& m : cls) {
        if (codes) sink.out() << m.code.bytes << '\n';
        else sink.out() << to_json(m.graph).dump() << '\n';
    }
    sink.out() << Json{{"count", cls.size()}}.dump() << '\n';
    return 0;
}

int cmd_rho(const std::string& path, const Common& c) {
    const auto g = load_graph_file(path);
    const Rational w = resolve_width(c.width);
    const SpectralRadius r = g.block ? spectral_radius(*g.block, w) : spectral_radius(g.graph, w);
    Sink sink(c.output);
    if (c.format == "text") {
        sink.out() << r.enclosure.to_decimal() << '\n';
    } else {
        Json j{{"order", g.graph.order()},
               {"enclosure", to_json(r.enclosure)},
               {"numeric_estimate", r.numeric_estimate},
               {"numeric_agrees", r.numeric_agrees}};
        sink.out() << j.dump() << '\n';
    }
    return 0;
}

int cmd_charpoly(const std::string& path, const std::string& engine, const Common& c) {
    const auto g = load_graph_file(path);
    std::optional<IntPolynomial> direct, schwenk;
    if (engine == "direct" || engine == "both") direct = charpoly_direct(g.graph);
    if (engine == "schwenk" || engine == "both") {
        if (!g.block) throw std::invalid_argument("the schwenk engine needs a block graph with uniform blocks");
        schwenk = charpoly_schwenk(*g.block);
    }
    Sink sink(c.output);
    if (c.format == "text") {
        if (direct) sink.out() << "direct  " << direct->to_text() << '\n';
        if (schwenk) sink.out() << "schwenk " << schwenk->to_text() << '\n';
        if (direct && schwenk) sink.out() << "equal " << (*direct == *schwenk ? "true" : "false") << '\n';
    } else {
        Json j = Json::object();
        if (direct) j["direct"] = to_json(*direct);
        if (schwenk) j["schwenk"] = to_json(*schwenk);
        if (direct && schwenk) j["equal"] = *direct == *schwenk;
        sink.out() << j.dump() << '\n';
    }
    return direct && schwenk && !(*direct == *schwenk) ? 2 : 0;
}

int cmd_compare(const std::string& p1, const std::string& p2, int budget, const Common& c) {
    const auto g = load_graph_file(p1);
    const auto h = load_graph_file(p2);
    const OrderVerdict v = precedes(g.graph, h.graph, budget);
    Sink sink(c.output);
    if (c.format == "text") sink.out() << to_string(v.outcome) << ": " << v.reason << '\n';
    else sink.out() << to_json(v).dump() << '\n';
    return v.outcome == Outcome::Undecided ? 3 : 0;
}

int cmd_reduce(const std::string& path, const std::string& policy, bool certify, const Common& c) {
    const auto g = load_graph_file(path);
    if (!g.block) throw std::invalid_argument("reduce needs a block graph with uniform blocks");
    ReduceOptions opt;
    opt.width = resolve_width(c.width);
    opt.certify = certify;
    if (policy == "enforce") opt.policy = HypothesisPolicy::Enforce;
    else if (policy == "track") opt.policy = HypothesisPolicy::Track;
    else throw std::invalid_argument("--policy must be enforce or track");

    const ReductionResult res = reduce_to_path_block(*g.block, opt);
    Sink sink(c.output);
    int i = 0;
    for (const auto& s : res.steps) {
        Json j{{"step", i++},
               {"rule", to_string(s.rule)},
               {"site", site_json(s.site)},
               {"before", to_json(s.before)},
               {"after", to_json(s.after)},
               {"rho_before", to_json(s.rho_before)},
               {"rho_after", to_json(s.rho_after)},
               {"max_cut_clique_before", s.max_cut_clique_before},
               {"hypothesis_exceeded", s.hypothesis_exceeded}};
        if (s.verdict) j["verdict"] = to_json(*s.verdict);
        sink.out() << j.dump() << '\n';
    }
    sink.out() << Json{{"final", to_json(res.final_graph)},
                       {"rho_initial", to_json(res.rho_initial)},
                       {"steps", res.steps.size()},
                       {"is_path_block", is_path_block(res.final_graph)},
                       {"hypothesis_exceeded_steps", res.hypothesis_exceeded_steps}}
                      .dump()
               << '\n';
    return 0;
}

int cmd_verify(const std::string& qs, const std::string& bs, std::uint64_t seed, int samples, int budget,
               const Common& c) {
    VerifyConfig cfg;
    cfg.qs = parse_range(qs);
    cfg.bs = parse_range(bs);
    cfg.width = resolve_width(c.width);
    cfg.jobs = resolve_jobs(c.jobs);
    cfg.seed = seed;
    cfg.identity_samples = samples;
    cfg.order_budget = budget;
    const VerifyReport report = run_verify(cfg);
    Sink sink(c.output);
    if (c.format == "json") sink.out() << render_json(report);
    else if (c.format == "text") sink.out() << render_text(report);
    else sink.out() << render_csv(report);
    return report.exit_code();
}

int cmd_bounds(int q, int b, bool enumerate, const Common& c) {
    const BoundReport r = bound_report(q, b, enumerate, resolve_width(c.width), resolve_jobs(c.jobs));
    Sink sink(c.output);
    if (c.format == "csv") {
        sink.out() << "q,b,n,lower,min_rho,max_rho,upper\n"
                   << r.q << ',' << r.b << ',' << r.n << ',' << r.lower.to_decimal(12) << ','
                   << (r.min_rho ? std::to_string(r.min_rho->mid_double()) : "") << ','
                   << (r.max_rho ? std::to_string(r.max_rho->mid_double()) : "") << ',' << r.upper.to_decimal(12)
                   << '\n';
        return 0;
    }
    Json j{{"q", r.q},
           {"b", r.b},
           {"n", r.n},
           {"lower", {{"exact", r.lower.to_string()}, {"decimal", r.lower.to_decimal(12)}, {"applies", r.lower_applies}}},
           {"upper", {{"exact", r.upper.to_string()}, {"decimal", r.upper.to_decimal(12)}}}};
    if (r.min_rho) {
        j["min_rho"] = to_json(*r.min_rho);
        j["min_witness"] = r.min_witness->bytes;
        j["max_rho"] = to_json(*r.max_rho);
        j["max_witness"] = r.max_witness->bytes;
    }
    if (r.lower_holds) j["lower_holds"] = *r.lower_holds;
    if (r.upper_holds) j["upper_holds"] = *r.upper_holds;
    sink.out() << j.dump() << '\n';
    return (r.lower_holds && !*r.lower_holds) || (r.upper_holds && !*r.upper_holds) ? 2 : 0;
}

void add_common(CLI::App* app, Common& c, bool with_width, const std::string& default_format) {
    if (with_width) app->add_option("--width", c.width, "enclosure width, e.g. 1e-8 or 1/1000")->capture_default_str();
    c.format = default_format;
    app->add_option("--format", c.format, "output format")->capture_default_str();
    app->add_option("--jobs", c.jobs, "worker threads (falls back to BLOCKSPEC_JOBS)");
    app->add_option("--output", c.output, "write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral tools for block graphs with uniform clique blocks"};
    app.require_subcommand(1);

    Common c_en, c_rho, c_cp, c_cmp, c_red, c_ver, c_bnd;
    int q = 2, b = 1, budget = kDefaultOrderBudget, samples = 5;
    bool codes = false, enumerate = false, no_certify = false;
    std::string file1, file2, engine = "both", policy = "track", qs = "2,3,4", bs = "1-4";
    std::uint64_t seed = 1;

    auto* en = app.add_subcommand("enumerate", "list B(qb+1, q) up to isomorphism");
    en->add_option("q,--q", q)->required();
    en->add_option("b,--b", b)->required();
    en->add_flag("--codes", codes, "print canonical codes only");
    add_common(en, c_en, false, "json");

    auto* rho = app.add_subcommand("rho", "certified spectral radius");
    rho->add_option("graph", file1)->required()->check(CLI::ExistingFile);
    add_common(rho, c_rho, true, "json");

    auto* cp = app.add_subcommand("charpoly", "characteristic polynomial");
    cp->add_option("graph", file1)->required()->check(CLI::ExistingFile);
    cp->add_option("--engine", engine)->check(CLI::IsMember({"direct", "schwenk", "both"}))->capture_default_str();
    add_common(cp, c_cp, false, "json");

    auto* cmp = app.add_subcommand("compare", "decide G < H");
    cmp->add_option("first", file1)->required()->check(CLI::ExistingFile);
    cmp->add_option("second", file2)->required()->check(CLI::ExistingFile);
    cmp->add_option("--budget", budget)->capture_default_str();
    add_common(cmp, c_cmp, false, "json");

    auto* red = app.add_subcommand("reduce", "reduce to the path-block, one JSON line per step");
    red->add_option("graph", file1)->required()->check(CLI::ExistingFile);
    red->add_option("--policy", policy, "enforce or track")->capture_default_str();
    red->add_flag("--no-certify", no_certify, "skip the per-step order decision");
    add_common(red, c_red, true, "json");

    auto* ver = app.add_subcommand("verify", "exhaustive checks over (q, b) classes");
    ver->add_option("--q", qs, "q values: 2,3,4 or 2-4")->capture_default_str();
    ver->add_option("--b", bs, "b values")->capture_default_str();
    ver->add_option("--seed", seed)->capture_default_str();
    ver->add_option("--samples", samples, "identity instances per identity (0 skips)")->capture_default_str();
    ver->add_option("--budget", budget)->capture_default_str();
    add_common(ver, c_ver, true, "csv");

    auto* bnd = app.add_subcommand("bounds", "closed-form bounds for B(qb+1, q)");
    bnd->add_option("q,--q", q)->required();
    bnd->add_option("b,--b", b)->required();
    bnd->add_flag("--enumerate", enumerate, "also compute min and max rho over the class");
    add_common(bnd, c_bnd, true, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage errors exit 1; 2 and 3 belong to verify
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*en) return cmd_enumerate(q, b, codes, c_en);
        if (*rho) return cmd_rho(file1, c_rho);
        if (*cp) return cmd_charpoly(file1, engine, c_cp);
        if (*cmp) return cmd_compare(file1, file2, budget, c_cmp);
        if (*red) return cmd_reduce(file1, policy, !no_certify, c_red);
        if (*ver) return cmd_verify(qs, bs, seed, samples, budget, c_ver);
        if (*bnd) return cmd_bounds(q, b, enumerate, c_bnd);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
