#include "seaidx/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "seaidx/chi_stats.hpp"
#include "seaidx/datagen.hpp"
#include "seaidx/io.hpp"
#include "seaidx/isax_tree.hpp"
#include "seaidx/metrics.hpp"
#include "seaidx/parallel.hpp"
#include "seaidx/sampling.hpp"
#include "seaidx/search.hpp"
#include "seaidx/summary_io.hpp"

namespace seaidx::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(8) << v;
    return s.str();
}

template <typename T>
std::string join(const std::vector<T>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

// How a summary file was produced; decides whether queries can be embedded on the fly.
std::string summary_provider(const std::string& name) {
    const auto sc = Sidecar::read(meta_path(name));
    return sc.contains("provider") ? sc.get("provider") : "external";
}

void tag_provider(const std::string& name, const std::string& provider) {
    auto sc = Sidecar::read(meta_path(name));
    sc.set("provider", provider);
    sc.write(meta_path(name));
}

Summaries summarize_with(const std::string& provider, const Dataset& data, std::size_t l, unsigned threads) {
    if (provider == "paa") return summarize_paa(data, l, threads);
    if (provider == "dft") return summarize_dft_dea(data, l, threads);
    throw UsageError("summaries from provider '" + provider +
                     "' cannot embed queries; pass --query-summary with precomputed query DEAs");
}

Summaries query_summaries_for(const Summaries& base, const std::string& base_name, const Dataset& queries,
                              const std::string& query_summary, unsigned threads) {
    if (!query_summary.empty()) {
        auto qs = load_summaries(query_summary);
        if (qs.n != queries.size()) {
            throw Error(ErrorCode::kSizeMismatch, "query summary has n=" + std::to_string(qs.n) + " but " +
                                                      std::to_string(queries.size()) + " queries");
        }
        if (qs.l != base.l || qs.kind != base.kind) throw Error(ErrorCode::kShapeMismatch, "query summary shape");
        return qs;
    }
    return summarize_with(summary_provider(base_name), queries, base.l, threads);
}

void check_summary_matches(const Summaries& s, const Dataset& d) {
    if (s.n != d.size()) {
        throw Error(ErrorCode::kSizeMismatch,
                    "summary n=" + std::to_string(s.n) + " but dataset n=" + std::to_string(d.size()));
    }
    if (s.source_m != d.length()) throw Error(ErrorCode::kShapeMismatch, "summary source_m differs from dataset m");
}

struct Options {
    unsigned threads = 0;

    // gen
    std::string kind = "randwalk";
    std::size_t n = 1000;
    std::size_t m = 256;
    std::uint64_t seed = 0;
    double amp = kDefaultAmplification;
    bool query_stream = false;
    std::string out;

    // shared
    std::string dataset;
    std::string summary;
    std::string queries;
    std::string query_summary;
    std::string csv;
    std::size_t l = kDefaultSegments;
    unsigned bits = kDefaultSaxBits;
    std::size_t h = kDefaultLeafSize;

    // summarize
    std::string summary_kind = "paa";
    std::string embedding;

    // sample
    std::string strategy = "seasam";
    std::size_t n_prime = 100;

    // query / eval
    std::vector<std::size_t> budgets = {100, 1000};
    std::vector<std::size_t> ks = {1, 5, 10, 50, 100};
    std::vector<std::size_t> lengths = {256, 128, 96, 16, 8};
    std::vector<std::size_t> sample_sizes = {100, 1000};
    std::size_t pairs = 100000;
    std::size_t seeds = 10;
    std::string metric;
    std::string sample;
    std::string reconstruction;
    bool exact = false;
    bool per_query = true;
};

unsigned effective_threads(const Options& o) { return o.threads > 0 ? o.threads : threads_from_env(); }

int cmd_gen(const Options& o, std::ostream& out) {
    GenSpec spec = parse_gen_kind(o.kind);
    spec.n = o.n;
    spec.m = o.m;
    spec.seed = o.seed;
    spec.amp = o.amp;
    const Dataset data = o.query_stream ? gen_queries(spec, o.n) : generate(spec);
    save_dataset(data, o.out, static_cast<std::int64_t>(o.seed));
    out << "gen kind=" << o.kind << " n=" << data.size() << " m=" << data.length() << " seed=" << o.seed
        << " stream=" << (o.query_stream ? "query" : "base") << " out=" << o.out << "\n";
    return 0;
}

int cmd_summarize(const Options& o, std::ostream& out) {
    Dataset data = load_dataset(o.dataset);
    if (!data.znormalized()) data = znormalize(data);
    const unsigned threads = effective_threads(o);
    Summaries s;
    std::string provider;
    if (o.summary_kind == "paa") {
        s = summarize_paa(data, o.l, threads);
        provider = "paa";
    } else if (o.summary_kind == "dft") {
        s = summarize_dft_dea(data, o.l, threads);
        provider = "dft";
    } else if (o.summary_kind == "dea") {
        if (o.embedding.empty()) throw UsageError("--kind dea requires --embedding <name>");
        const auto sc = Sidecar::read(meta_path(o.embedding));
        const auto n = static_cast<std::size_t>(sc.get_int("n"));
        const auto l = static_cast<std::size_t>(sc.get_int("m"));
        if (n != data.size()) {
            throw Error(ErrorCode::kSizeMismatch, "embedding n=" + std::to_string(n) + " but dataset n=" +
                                                      std::to_string(data.size()));
        }
        const auto raw = read_f32(payload_path(o.embedding), n * l);
        s = summaries_from_embeddings(raw, n, l, data.length());
        provider = "external";
    } else {
        throw UsageError("unknown summary kind '" + o.summary_kind + "'");
    }
    const auto words = sax_words(s, o.bits, threads);
    save_summaries(s, o.out);
    tag_provider(o.out, provider);
    save_sax(words, o.out);
    out << "summarize kind=" << o.summary_kind << " n=" << s.n << " l=" << s.l << " bits=" << o.bits
        << " out=" << o.out << "\n";
    return 0;
}

SaxWordArray words_for(const Options& o, const Dataset& data) {
    if (!o.summary.empty()) {
        auto words = load_sax(o.summary);
        if (words.n != data.size()) throw Error(ErrorCode::kSizeMismatch, "SAX file does not match dataset");
        return words;
    }
    return sax_words(summarize_paa(data, o.l, effective_threads(o)), o.bits);
}

int cmd_sample(const Options& o, std::ostream& out) {
    const Dataset data = load_dataset(o.dataset);
    const auto strategy = parse_sample_strategy(o.strategy);
    const SampleSet sample = strategy == SampleStrategy::kSeasam ? seasam(words_for(o, data), o.n_prime)
                                                                 : uniform_sample(data.size(), o.n_prime, o.seed);
    save_sample(sample, o.out);
    out << "sample strategy=" << o.strategy << " n=" << data.size() << " n_prime=" << sample.indices.size()
        << " seed=" << sample.seed << " out=" << o.out << "\n";
    return 0;
}

IsaxTree tree_for(const Options& o, SummaryKind kind) {
    return IsaxTree::build(load_sax(o.summary), o.h, kind);
}

int cmd_index(const Options& o, std::ostream& out) {
    if (o.summary.empty()) throw UsageError("index requires --summary <name>");
    const Summaries s = load_summaries(o.summary);
    const IsaxTree tree = tree_for(o, s.kind);
    out << tree.stats().str() << "\n";
    if (!o.csv.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (auto index : tree.leaves()) {
            const auto& node = tree.node(static_cast<std::size_t>(index));
            rows.push_back({std::to_string(index), std::to_string(node.ids.size()), std::to_string(node.depth),
                            node.unsplittable ? "1" : "0"});
        }
        write_csv(o.csv, {"leaf", "size", "depth", "unsplittable"}, rows);
    }
    return 0;
}

int cmd_query(const Options& o, std::ostream& out) {
    if (o.summary.empty() || o.queries.empty()) throw UsageError("query requires --summary and --queries");
    const Dataset data = load_dataset(o.dataset);
    const Dataset queries = load_dataset(o.queries);
    const Summaries s = load_summaries(o.summary);
    check_summary_matches(s, data);
    const unsigned threads = effective_threads(o);
    const Summaries qs = query_summaries_for(s, o.summary, queries, o.query_summary, threads);
    const IsaxTree tree = tree_for(o, s.kind);
    out << tree.stats().str() << "\n";

    const auto result = tightness_by_budget(tree, data, queries, qs, o.budgets, threads);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t b = 0; b < o.budgets.size(); ++b) {
        for (const auto& r : result.reports[b]) {
            if (o.per_query) {
                out << "qid=" << r.query_id << " budget=" << o.budgets[b] << " bsf=" << fmt(r.approximate_distance)
                    << " exact=" << fmt(r.exact_distance) << " tightness=" << fmt(r.tightness()) << "\n";
            }
            rows.push_back({std::to_string(r.query_id), std::to_string(o.budgets[b]), fmt(r.approximate_distance),
                            fmt(r.exact_distance), fmt(r.tightness()), std::to_string(r.series_examined()),
                            fmt(leaf_compactness(tree, data, r.visited_leaves))});
        }
    }
    for (std::size_t b = 0; b < o.budgets.size(); ++b) {
        MetricReport rep{"tightness", result.mean_tightness[b], queries.size(),
                         {{"budget", std::to_string(o.budgets[b])}, {"kind", std::string(to_string(s.kind))},
                          {"l", std::to_string(s.l)}, {"h", std::to_string(o.h)}}};
        out << rep.str() << "\n";
    }
    if (o.exact) {
        if (s.kind != SummaryKind::kPaa) {
            throw Error(ErrorCode::kUnsupportedSummarization, "--exact needs a PAA-based summary");
        }
        double examined = 0.0;
        for (std::size_t q = 0; q < queries.size(); ++q) {
            examined += static_cast<double>(exact_query_pruned(tree, data, queries.row(q)).series_examined);
        }
        out << MetricReport{"exact_examined", examined / static_cast<double>(queries.size()), queries.size(),
                            {{"n", std::to_string(data.size())}}}
                   .str()
            << "\n";
    }
    if (!o.csv.empty()) {
        write_csv(o.csv, {"qid", "budget", "bsf", "exact", "tightness", "examined", "compactness"}, rows);
    }
    return 0;
}

int eval_chi(const Options& o, std::ostream& out) {
    std::vector<std::vector<std::string>> rows;
    for (auto m : o.lengths) {
        for (auto scale : {ChiScale::kNone, ChiScale::kTo256, ChiScale::kInvSqrtLen}) {
            const auto a = chi_stats_analytic(m, scale);
            const auto mc = chi_stats_montecarlo(m, scale, o.pairs, o.seed);
            const std::vector<std::pair<std::string, std::string>> echo = {{"m", std::to_string(m)},
                                                                           {"scale", std::string(to_string(scale))}};
            out << MetricReport{"chi_mean_analytic", a.mean, 1, echo}.str() << "\n";
            out << MetricReport{"chi_var_analytic", a.variance, 1, echo}.str() << "\n";
            out << MetricReport{"chi_mean_mc", mc.mean, mc.samples, echo}.str() << "\n";
            out << MetricReport{"chi_var_mc", mc.variance, mc.samples, echo}.str() << "\n";
            rows.push_back({std::to_string(m), std::string(to_string(scale)), fmt(a.mean), fmt(a.variance),
                            fmt(mc.mean), fmt(mc.variance), fmt(mc.mean_stderr), fmt(mc.variance_stderr)});
        }
    }
    if (!o.csv.empty()) {
        write_csv(o.csv, {"m", "scale", "mean", "variance", "mc_mean", "mc_variance", "mc_mean_se", "mc_var_se"},
                  rows);
    }
    return 0;
}

int cmd_eval(const Options& o, std::ostream& out) {
    const unsigned threads = effective_threads(o);
    if (o.metric == "chi") return eval_chi(o, out);

    if (o.dataset.empty()) throw UsageError("--metric " + o.metric + " requires --dataset <name>");
    const Dataset data = load_dataset(o.dataset);
    if (o.metric == "rms") {
        if (o.reconstruction.empty()) throw UsageError("--metric rms requires --reconstruction <name>");
        const Dataset rec = load_dataset(o.reconstruction);
        out << MetricReport{"reconstruction_rms", reconstruction_rms(data, rec), data.size(),
                            {{"m", std::to_string(data.length())}}}
                   .str()
            << "\n";
        return 0;
    }

    if (o.summary.empty()) throw UsageError("--metric " + o.metric + " requires --summary <name>");
    const Summaries s = load_summaries(o.summary);
    check_summary_matches(s, data);
    const std::vector<std::pair<std::string, std::string>> echo = {
        {"kind", std::string(to_string(s.kind))}, {"l", std::to_string(s.l)}, {"m", std::to_string(s.source_m)}};

    if (o.metric == "avg-diff") {
        const SampleSet sample =
            o.sample.empty() ? seasam(load_sax(o.summary), std::min(o.n_prime, data.size())) : load_sample(o.sample);
        const auto pairs = pair_samples(sample.indices, o.seed);
        out << MetricReport{"avg_distance_diff", avg_distance_diff(data, s, pairs), pairs.size(), echo}.str() << "\n";
        return 0;
    }
    if (o.metric == "leaf-coverage") {
        const IsaxTree tree = tree_for(o, s.kind);
        std::vector<std::uint64_t> seed_list(o.seeds);
        for (std::size_t i = 0; i < o.seeds; ++i) seed_list[i] = o.seed + i;
        const auto table = leaf_coverage_experiment(tree, o.sample_sizes, seed_list);
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : table) {
            auto e = echo;
            e.emplace_back("strategy", std::string(to_string(row.strategy)));
            e.emplace_back("n_prime", std::to_string(row.n_prime));
            e.emplace_back("leaves", std::to_string(tree.leaves().size()));
            out << MetricReport{"leaf_coverage", row.coverage, row.runs, e}.str() << "\n";
            rows.push_back({std::string(to_string(row.strategy)), std::to_string(row.n_prime), fmt(row.coverage)});
        }
        if (!o.csv.empty()) write_csv(o.csv, {"strategy", "n_prime", "coverage"}, rows);
        return 0;
    }

    if (o.queries.empty()) throw UsageError("--metric " + o.metric + " requires --queries <name>");
    const Dataset queries = load_dataset(o.queries);
    const Summaries qs = query_summaries_for(s, o.summary, queries, o.query_summary, threads);
    if (o.metric == "nn-coverage") {
        const auto cov = nn_coverage(data, s, queries, qs, o.ks, threads);
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < o.ks.size(); ++i) {
            auto e = echo;
            e.emplace_back("k", std::to_string(o.ks[i]));
            out << MetricReport{"nn_coverage", cov[i], queries.size(), e}.str() << "\n";
            rows.push_back({std::to_string(o.ks[i]), fmt(cov[i])});
        }
        if (!o.csv.empty()) write_csv(o.csv, {"k", "coverage"}, rows);
        return 0;
    }
    if (o.metric == "ideal-tightness") {
        const auto curve = ideal_tightness_curve(data, s, queries, qs, o.budgets, threads);
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < o.budgets.size(); ++i) {
            auto e = echo;
            e.emplace_back("budget", std::to_string(o.budgets[i]));
            out << MetricReport{"ideal_tightness", curve[i], queries.size(), e}.str() << "\n";
            rows.push_back({std::to_string(o.budgets[i]), fmt(curve[i])});
        }
        if (!o.csv.empty()) write_csv(o.csv, {"budget", "tightness"}, rows);
        return 0;
    }
    throw UsageError("unknown metric '" + o.metric + "'");
}

int cmd_stats(const Options& o, std::ostream& out) {
    if (!o.dataset.empty()) {
        const Dataset data = load_dataset(o.dataset);
        double sos = 0.0;
        double worst_mean = 0.0;
        double worst_std = 0.0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            const auto r = data.row(i);
            for (float v : r) sos += static_cast<double>(v) * v;
            const auto mo = moments(r);
            worst_mean = std::max(worst_mean, std::fabs(mo.mean));
            worst_std = std::max(worst_std, std::fabs(mo.stddev - 1.0));
        }
        out << "dataset n=" << data.size() << " m=" << data.length() << " znormalized=" << data.znormalized()
            << " mean_sos=" << fmt(sos / static_cast<double>(data.size())) << " max_abs_mean=" << fmt(worst_mean)
            << " max_std_dev=" << fmt(worst_std) << "\n";
    }
    if (!o.summary.empty()) {
        const Summaries s = load_summaries(o.summary);
        double sos = 0.0;
        for (double v : s.values) sos += v * v;
        out << "summary kind=" << to_string(s.kind) << " n=" << s.n << " l=" << s.l << " source_m=" << s.source_m
            << " mean_sos=" << fmt(sos / static_cast<double>(s.n)) << "\n";
        out << IsaxTree::build(load_sax(o.summary), o.h, s.kind).stats().str() << "\n";
    }
    if (o.dataset.empty() && o.summary.empty()) throw UsageError("stats requires --dataset and/or --summary");
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Data-series summarization, sampling, iSAX indexing and approximate search"};
    app.set_config("--config", "", "Optional key=value configuration file; command-line flags take precedence");
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "Worker threads (falls back to SEAIDX_THREADS, then 1)");

    auto* gen = app.add_subcommand("gen", "Generate a synthetic dataset");
    gen->add_option("--kind", o.kind, "randwalk | f5 | f10")->check(CLI::IsMember({"randwalk", "f5", "f10"}));
    gen->add_option("--n", o.n, "Number of series")->check(CLI::PositiveNumber);
    gen->add_option("--m", o.m, "Series length")->check(CLI::Range(2, 1 << 20));
    gen->add_option("--seed", o.seed, "Generator seed");
    gen->add_option("--amp", o.amp, "Amplification of the leading frequencies (f5/f10)");
    gen->add_flag("--query-stream", o.query_stream, "Draw from the query stream (disjoint from the base series)");
    gen->add_option("--out", o.out, "Output name (writes <out>.bin and <out>.meta)")->required();

    auto* summarize = app.add_subcommand("summarize", "Summarize a dataset (PAA, DFT-based DEA, or external DEA)");
    summarize->add_option("--dataset", o.dataset, "Dataset name")->required();
    summarize->add_option("--kind", o.summary_kind, "paa | dft | dea")->check(CLI::IsMember({"paa", "dft", "dea"}));
    summarize->add_option("--embedding", o.embedding, "Raw or scaled n x l embedding file name (kind dea)");
    summarize->add_option("--l", o.l, "Summary width (segments / coefficients)")->check(CLI::PositiveNumber);
    summarize->add_option("--b", o.bits, "SAX bits per symbol")->check(CLI::Range(1, 8));
    summarize->add_option("--out", o.out, "Output name (summary .bin/.meta and .sax/.sax.meta)")->required();

    auto* sample = app.add_subcommand("sample", "Draw a SEAsam or uniform sample");
    sample->add_option("--dataset", o.dataset, "Dataset name")->required();
    sample->add_option("--summary", o.summary, "Use this summary's SAX words instead of PAA");
    sample->add_option("--strategy", o.strategy, "seasam | uniform")->check(CLI::IsMember({"seasam", "uniform"}));
    sample->add_option("--n-prime", o.n_prime, "Sample size")->check(CLI::PositiveNumber);
    sample->add_option("--seed", o.seed, "Seed for uniform sampling");
    sample->add_option("--l", o.l, "PAA segments when no summary is given");
    sample->add_option("--b", o.bits, "SAX bits when no summary is given")->check(CLI::Range(1, 8));
    sample->add_option("--out", o.out, "Output name (writes <out>.idx and <out>.idx.meta)")->required();

    auto* index = app.add_subcommand("index", "Build the iSAX tree and report its shape");
    index->add_option("--summary", o.summary, "Summary name")->required();
    index->add_option("--h", o.h, "Leaf size")->check(CLI::Range(1, 1 << 30));
    index->add_option("--csv", o.csv, "Per-leaf CSV output");

    auto* query = app.add_subcommand("query", "Budget-limited approximate queries with tightness");
    query->add_option("--dataset", o.dataset, "Dataset name")->required();
    query->add_option("--summary", o.summary, "Summary name")->required();
    query->add_option("--queries", o.queries, "Query dataset name")->required();
    query->add_option("--query-summary", o.query_summary, "Precomputed query summaries (needed for external DEAs)");
    query->add_option("--budget", o.budgets, "Series budgets (comma separated)")->delimiter(',');
    query->add_option("--h", o.h, "Leaf size")->check(CLI::Range(1, 1 << 30));
    query->add_flag("--exact", o.exact, "Also run MINDIST-pruned exact search (PAA only)");
    query->add_flag("!--no-per-query", o.per_query, "Only print the aggregated lines");
    query->add_option("--csv", o.csv, "Per-query CSV output");

    auto* eval = app.add_subcommand("eval", "Quality metrics");
    eval->add_option("--metric", o.metric, "avg-diff | rms | nn-coverage | ideal-tightness | leaf-coverage | chi")
        ->required()
        ->check(CLI::IsMember({"avg-diff", "rms", "nn-coverage", "ideal-tightness", "leaf-coverage", "chi"}));
    eval->add_option("--dataset", o.dataset, "Dataset name");
    eval->add_option("--summary", o.summary, "Summary name");
    eval->add_option("--queries", o.queries, "Query dataset name");
    eval->add_option("--query-summary", o.query_summary, "Precomputed query summaries");
    eval->add_option("--reconstruction", o.reconstruction, "Reconstructed dataset name (rms)");
    eval->add_option("--sample", o.sample, "Sample name for pair drawing (avg-diff)");
    eval->add_option("--n-prime", o.n_prime, "SEAsam sample size when --sample is absent (avg-diff)");
    eval->add_option("--sizes", o.sample_sizes, "Sample sizes (leaf-coverage)")->delimiter(',');
    eval->add_option("--seeds", o.seeds, "Uniform seeds to average (leaf-coverage)");
    eval->add_option("--k", o.ks, "Neighborhood sizes (nn-coverage)")->delimiter(',');
    eval->add_option("--budget", o.budgets, "Budgets (ideal-tightness)")->delimiter(',');
    eval->add_option("--lengths", o.lengths, "Series lengths (chi)")->delimiter(',');
    eval->add_option("--pairs", o.pairs, "Monte Carlo pairs (chi)");
    eval->add_option("--seed", o.seed, "Seed");
    eval->add_option("--h", o.h, "Leaf size (leaf-coverage)")->check(CLI::Range(1, 1 << 30));
    eval->add_option("--csv", o.csv, "CSV output");

    auto* stats = app.add_subcommand("stats", "Describe a dataset and/or summary");
    stats->add_option("--dataset", o.dataset, "Dataset name");
    stats->add_option("--summary", o.summary, "Summary name");
    stats->add_option("--h", o.h, "Leaf size for the tree report")->check(CLI::Range(1, 1 << 30));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) return cmd_gen(o, out);
        if (*summarize) return cmd_summarize(o, out);
        if (*sample) return cmd_sample(o, out);
        if (*index) return cmd_index(o, out);
        if (*query) return cmd_query(o, out);
        if (*eval) return cmd_eval(o, out);
        if (*stats) return cmd_stats(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace seaidx::cli
