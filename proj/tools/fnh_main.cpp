// Command-line front end: every library operation behind a subcommand,
// JSON or CSV reports on stdout, diagnostics on stderr.
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.
#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <string>

#include "fnh/config.hpp"
#include "fnh/flutes.hpp"
#include "fnh/hyptrig.hpp"
#include "fnh/kernels.hpp"
#include "fnh/mcg.hpp"
#include "fnh/metric.hpp"
#include "fnh/paths.hpp"
#include "fnh/pantsgraph.hpp"

using namespace fnh;

namespace {

struct Options {
    std::size_t truncate = 1000;
    double tol = 1e-9;
    std::string output = "json";
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--truncate", opt.truncate, "truncation index")->capture_default_str();
    cmd->add_option("--tol", opt.tol, "numerical tolerance")->capture_default_str();
    cmd->add_option("--output", opt.output, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string csv(double v) { return format_double(v); }

int run_trig(const Options& opt, double l1, double l2, double lp, double collar_x) {
    if (collar_x > 0.0) {
        double r = collar_width(collar_x);
        if (opt.output == "csv") {
            std::cout << "x,r\n" << csv(collar_x) << "," << csv(r) << "\n";
        } else {
            emit(json{{"formula", "collar arcsinh(1/sinh x)"}, {"x", collar_x}, {"r", r}});
        }
        return 0;
    }
    PantsGeom p{l1, l2, lp};
    double d = orthodistance(p);
    OrthodistanceBounds b = orthodistance_bounds(p);
    PentagonSplit s = pentagon_split(p);
    double gap = std::abs(s.d1 + s.d2 - d);
    if (gap > opt.tol)
        throw SplitSearchError("pentagon oracle disagrees with the hexagon rule by " +
                               format_double(gap));
    if (opt.output == "csv") {
        std::cout << "l1,l2,lp,orthodistance,lower,upper,c1,c2,d1,d2,oracle_gap\n"
                  << csv(l1) << "," << csv(l2) << "," << csv(lp) << "," << csv(d) << ","
                  << csv(b.lower) << "," << csv(b.upper) << "," << csv(s.c1) << ","
                  << csv(s.c2) << "," << csv(s.d1) << "," << csv(s.d2) << "," << csv(gap)
                  << "\n";
    } else {
        emit(json{{"formula", "hexagon rule cosh d = (cosh c + cosh a cosh b)/(sinh a sinh b)"},
                  {"l1", l1},
                  {"l2", l2},
                  {"lp", lp},
                  {"orthodistance", d},
                  {"bounds", {{"lower", b.lower}, {"upper", b.upper}}},
                  {"pentagon",
                   {{"c1", s.c1}, {"c2", s.c2}, {"d1", s.d1}, {"d2", s.d2}, {"sum", s.d1 + s.d2}}},
                  {"oracle_gap", gap},
                  {"tol", opt.tol}});
    }
    return 0;
}

int run_metric(const Options& opt, const std::string& zfile, const std::string& wfile) {
    CoordSeq z = load_coordseq(zfile), w = load_coordseq(wfile);
    MetricValue m = fn_distance(z, w, opt.truncate);
    if (opt.output == "csv") {
        std::vector<double> terms = metric_terms(z, w, opt.truncate);
        std::cout << "i,term,cumulative\n";
        double cum = 0.0;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            cum += terms[i];
            std::cout << (i + 1) << "," << csv(terms[i]) << "," << csv(cum) << "\n";
        }
    } else {
        emit(json{{"formula", "sum 2^-i [ |dl|/(1+|dl|) + |dt|/(1+|dt|) ]"},
                  {"truncation", opt.truncate},
                  {"value", m.value},
                  {"tail_bound", m.tail_bound}});
    }
    return 0;
}

int run_zigzag(const Options& opt, const std::string& zfile, const std::string& wfile, double t) {
    CoordSeq z = load_coordseq(zfile), w = load_coordseq(wfile);
    CoordSeq at = zigzag_eval(z, w, t);
    MetricValue dist = fn_distance(at, w, opt.truncate);
    emit(json{{"path", "zigzag"},
              {"t", t},
              {"coordinates", to_json(at)},
              {"distance_to_target", {{"value", dist.value}, {"tail_bound", dist.tail_bound}}},
              {"truncation", opt.truncate}});
    return 0;
}

int run_segment(const Options&, const std::string& zfile, const std::string& wfile, double s,
                double peripheral_s) {
    if (peripheral_s >= 1.0) {
        CoordSeq z = load_coordseq(zfile);
        json s_field = std::isfinite(peripheral_s) ? json(peripheral_s) : json("inf");
        emit(json{{"path", "peripheral-scale"},
                  {"s", std::move(s_field)},
                  {"coordinates", to_json(peripheral_scale_eval(z, peripheral_s))}});
        return 0;
    }
    CoordSeq z = load_coordseq(zfile), w = load_coordseq(wfile);
    emit(json{{"path", "segment"}, {"s", s}, {"coordinates", to_json(segment_eval(z, w, s))}});
    return 0;
}

int run_complete(const Options& opt, const std::string& config) {
    FluteStructure f{load_coordseq(config)};
    CompletenessVerdict v = classify_completeness(f);
    if (opt.output == "csv") {
        std::cout << "n,term,cumulative\n";
        for (const SeriesRow& r : v.evidence)
            std::cout << r.n << "," << csv(r.term) << "," << csv(r.cumulative) << "\n";
        std::cout << "verdict," << to_string(v.status) << ",\n";
    } else {
        json rows = json::array();
        for (const SeriesRow& r : v.evidence)
            rows.push_back(json{{"n", r.n}, {"term", r.term}, {"cumulative", r.cumulative}});
        json j{{"verdict", to_string(v.status)},
               {"notes", v.notes},
               {"evidence", std::move(rows)},
               {"evidence_upper_tail", v.evidence_upper_tail}};
        if (!v.citation.empty()) j["citation"] = v.citation;
        json ends{{"nonisolated", to_string(classify_end(f, EndDesignator{}))},
                  {"isolated_1", to_string(classify_end(f, EndDesignator{1}))}};
        j["ends"] = std::move(ends);
        emit(j);
    }
    return 0;
}

int run_nonconvexity(const Options& opt) {
    NonconvexityReport rep = nonconvexity_experiment(opt.truncate);
    if (opt.output == "csv") {
        std::cout << "n,d_n,cumulative,asymptote,ratio\n";
        for (const NonconvexityRow& r : rep.rows)
            std::cout << r.n << "," << csv(r.d_n) << "," << csv(r.cumulative) << ","
                      << csv(r.asymptote) << "," << csv(r.ratio) << "\n";
        std::cout << "verdict," << to_string(rep.midpoint_status) << ",,,\n";
    } else {
        json rows = json::array();
        for (const NonconvexityRow& r : rep.rows)
            rows.push_back(json{{"n", r.n},
                                {"d_n", r.d_n},
                                {"cumulative", r.cumulative},
                                {"asymptote", r.asymptote},
                                {"ratio", r.ratio}});
        emit(json{{"experiment", "straight segment between half-twist flutes"},
                  {"truncation", opt.truncate},
                  {"endpoints", to_string(rep.endpoint_status)},
                  {"endpoint_citation", rep.endpoint_citation},
                  {"midpoint", to_string(rep.midpoint_status)},
                  {"partial_sum", rep.partial_sum},
                  {"lower_tail", rep.lower_tail},
                  {"upper_tail", rep.upper_tail},
                  {"rows", std::move(rows)}});
    }
    return 0;
}

const MultiTwist& require_multitwist(const MappingClass& mc) {
    if (mc.generators.size() != 1 || !std::holds_alternative<MultiTwist>(mc.generators[0]))
        throw std::invalid_argument("this operation needs a single multi-twist mapping class");
    return std::get<MultiTwist>(mc.generators[0]);
}

int run_classify(const Options&, const std::string& mc_spec, const std::string& config) {
    MappingClass mc = parse_mapping_class_spec(mc_spec);
    CoordSeq x = load_coordseq(config);
    QcResult r = matsuzaki_classify(require_multitwist(mc), x);
    emit(json{{"criterion", "sup_m |n_m| l_m"},
              {"verdict", to_string(r.verdict)},
              {"product", r.product},
              {"sampled_sup", r.sampled_sup},
              {"support", support_class(mc) == SupportClass::FINITE ? "FINITE" : "INFINITE"}});
    return 0;
}

int run_trichotomy(const Options&, const std::string& mc_spec, const std::string& sub_spec,
                   const std::string& powers_spec, double tau_inf) {
    if (!powers_spec.empty()) {
        MappingClass powers_mc = parse_mapping_class_spec(powers_spec);
        const MultiTwist& mt = require_multitwist(powers_mc);
        if (!std::holds_alternative<RateExpr>(mt.counts))
            throw std::invalid_argument("translation powers need a symbolic count family");
        NeverVerdict nv = never_qc_by_translation(std::get<RateExpr>(mt.counts), tau_inf);
        emit(json{{"criterion", "translation lengths tau(phi_i^n) = n tau(phi_i)"},
                  {"tau_inf", tau_inf},
                  {"verdict", nv == NeverVerdict::NEVER ? "NEVER" : "UNKNOWN"}});
        return 0;
    }
    MappingClass mc = parse_mapping_class_spec(mc_spec);
    SubspaceDesc sub = parse_subspace_spec(sub_spec);
    TrichotomyVerdict v = trichotomy(mc, sub);
    json j{{"subspace", sub.describe()},
           {"type", to_string(v.type)},
           {"justification", v.justification}};
    if (v.qc_witness) j["qc_witness"] = to_json(*v.qc_witness);
    if (v.non_qc_witness) j["non_qc_witness"] = to_json(*v.non_qc_witness);
    emit(j);
    return 0;
}

int run_drmember(const Options&, const std::string& config, double A, double p, double q,
                 const std::string& r_spec) {
    SubspaceDesc sub = parse_subspace_spec("dr:" + r_spec);
    RateExpr lengths;
    if (!config.empty())
        lengths = load_coordseq(config).lengths();
    else
        lengths = RateExpr::power_log(A, p, q);
    Membership m = dr_membership(lengths, sub.r);
    emit(json{{"r", sub.r},
              {"lengths", to_json(lengths)},
              {"membership", m == Membership::MEMBER ? "MEMBER" : "NOT_MEMBER"}});
    return 0;
}

int run_extract_flute(const Options& opt, const std::string& family, std::size_t depth,
                      std::size_t seed) {
    GraphFamily fam;
    if (family == "flute")
        fam = GraphFamily::FLUTE;
    else if (family == "biinfinite")
        fam = GraphFamily::BIINFINITE_FLUTE;
    else if (family == "lochness")
        fam = GraphFamily::LOCH_NESS;
    else if (family == "cantor")
        fam = GraphFamily::CANTOR_TREE;
    else
        throw std::invalid_argument("unknown family: " + family);
    FiniteGraph g = truncate(DualGraph{fam}, depth);
    FiniteGraph tree = maximal_tree(g);
    FluteDescriptor d = extract_flute(tree, seed);
    if (opt.output == "csv") {
        std::cout << g.edge_list_text();
        return 0;
    }
    json spine_edges = json::array(), rungs = json::array(), boundary = json::array();
    for (const auto& [a, b] : d.spine_edges) spine_edges.push_back(json::array({a, b}));
    for (const auto& [a, b] : d.rungs) rungs.push_back(json::array({a, b}));
    for (const auto& [v, c] : d.boundary) boundary.push_back(json::array({v, c}));
    emit(json{{"family", to_string(fam)},
              {"depth", depth},
              {"seed", seed},
              {"vertices", g.vertices.size()},
              {"tree_edges", tree.edges.size()},
              {"spine", d.spine},
              {"spine_length", d.spine_length()},
              {"spine_edges", std::move(spine_edges)},
              {"rungs", std::move(rungs)},
              {"boundary", std::move(boundary)}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Fenchel-Nielsen coordinate computations for infinite-type hyperbolic "
        "surfaces: pants trigonometry, the product metric, deformation paths, "
        "flute completeness, and the multi-twist quasiconformality trichotomy"};
    app.require_subcommand(1);

    Options opt;
    double l1 = 0, l2 = 0, lp = 0, collar_x = 0;
    std::string zfile, wfile, config, mc_spec, sub_spec = "full", powers_spec;
    double t = 0, s = 0, peripheral_s = 0, tau_inf = 0;
    double A = 1, p = 0, q = 0;
    std::string r_spec = "2", family = "cantor";
    std::size_t depth = 10, seed = 0;

    CLI::App* trig = app.add_subcommand("trig", "pants trigonometry for one pair of pants");
    trig->add_option("--l1", l1, "first boundary length");
    trig->add_option("--l2", l2, "second boundary length");
    trig->add_option("--lp", lp, "third boundary length (0 = cusp)");
    trig->add_option("--collar", collar_x, "report the collar width r(x) instead");
    add_common(trig, opt);

    CLI::App* metric = app.add_subcommand("metric", "product metric between two families");
    metric->add_option("--z", zfile, "first family config")->required();
    metric->add_option("--w", wfile, "second family config")->required();
    add_common(metric, opt);

    CLI::App* zigzag = app.add_subcommand("zigzag", "zig-zag path evaluation");
    zigzag->add_option("--z", zfile, "start family config")->required();
    zigzag->add_option("--w", wfile, "target family config")->required();
    zigzag->add_option("--t", t, "path parameter in [0,1]")->required();
    add_common(zigzag, opt);

    CLI::App* segment = app.add_subcommand("segment", "straight segment or peripheral scaling");
    segment->add_option("--z", zfile, "start family config")->required();
    segment->add_option("--w", wfile, "target family config");
    segment->add_option("--s", s, "segment parameter in [0,1]");
    segment->add_option("--peripheral-scale", peripheral_s,
                        "scale peripheral lengths of --z by 1/s (s >= 1, inf allowed)");
    add_common(segment, opt);

    CLI::App* complete = app.add_subcommand("complete", "completeness classification of a flute");
    complete->add_option("--config", config, "flute family config")->required();
    add_common(complete, opt);

    CLI::App* nonconvexity =
        app.add_subcommand("nonconvexity", "straight-line experiment between half-twist flutes");
    add_common(nonconvexity, opt);

    CLI::App* classify = app.add_subcommand("classify", "multi-twist qc classification");
    classify->add_option("--mc", mc_spec, "mapping class (file or twist-power:E)")->required();
    classify->add_option("--config", config, "structure config")->required();
    add_common(classify, opt);

    CLI::App* trich = app.add_subcommand("trichotomy", "always/sometimes/never classification");
    trich->add_option("--mc", mc_spec, "mapping class (file or twist-power:E)");
    trich->add_option("--subspace", sub_spec,
                      "full | geod | metr | systole:EPS | dr:R")->capture_default_str();
    trich->add_option("--translation-powers", powers_spec,
                      "pseudo-Anosov power family (file or twist-power:E)");
    trich->add_option("--tau-inf", tau_inf, "lower bound on the translation lengths");
    add_common(trich, opt);

    CLI::App* drmember = app.add_subcommand("drmember", "D_r membership of a length family");
    drmember->add_option("--config", config, "family config (lengths field is used)");
    drmember->add_option("--A", A, "amplitude");
    drmember->add_option("--p", p, "power exponent of m^-p");
    drmember->add_option("--q", q, "log exponent");
    drmember->add_option("--r", r_spec, "chain index (e.g. 2 or 1/3)")->capture_default_str();
    add_common(drmember, opt);

    CLI::App* extract = app.add_subcommand("extract-flute", "flute from a dual-graph truncation");
    extract->add_option("--family", family, "flute | biinfinite | lochness | cantor")
        ->capture_default_str();
    extract->add_option("--depth", depth, "truncation radius")->capture_default_str();
    extract->add_option("--seed", seed, "ray seed vertex")->capture_default_str();
    add_common(extract, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (trig->parsed()) return run_trig(opt, l1, l2, lp, collar_x);
        if (metric->parsed()) return run_metric(opt, zfile, wfile);
        if (zigzag->parsed()) return run_zigzag(opt, zfile, wfile, t);
        if (segment->parsed()) return run_segment(opt, zfile, wfile, s, peripheral_s);
        if (complete->parsed()) return run_complete(opt, config);
        if (nonconvexity->parsed()) return run_nonconvexity(opt);
        if (classify->parsed()) return run_classify(opt, mc_spec, config);
        if (trich->parsed()) return run_trichotomy(opt, mc_spec, sub_spec, powers_spec, tau_inf);
        if (drmember->parsed()) return run_drmember(opt, config, A, p, q, r_spec);
        if (extract->parsed()) return run_extract_flute(opt, family, depth, seed);
    } catch (const SplitSearchError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
