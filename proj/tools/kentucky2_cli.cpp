// kentucky2: command line front end for the Kentucky-2 ((1,2)-Generacci)
// toolkit.  Every subcommand supports --format json|csv|plain; json payloads
// carry schema_version 1 and serialize big integers as decimal strings.
//
// Exit codes: 0 success, 2 usage, 3 exhaustive budget exceeded, 4 internal
// cross-check failure.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kentucky/counting.hpp"
#include "kentucky/decompose.hpp"
#include "kentucky/errors.hpp"
#include "kentucky/gaps.hpp"
#include "kentucky/sampler.hpp"
#include "kentucky/sequence.hpp"
#include "kentucky/stats.hpp"

using json = nlohmann::ordered_json;
using namespace kentucky;

namespace {

enum class Format { plain, csv, json };

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::plain;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or plain)");
}

// Decimal, or base^exponent shorthand (e.g. 10^600).
Nat parse_nat(const std::string& text) {
    const auto caret = text.find('^');
    if (caret == std::string::npos) {
        const Nat v(text, 10);
        if (v < 0) throw std::invalid_argument("value must be non-negative: " + text);
        return v;
    }
    const Nat base(text.substr(0, caret), 10);
    const unsigned long exp = std::stoul(text.substr(caret + 1));
    if (base < 0) throw std::invalid_argument("value must be non-negative: " + text);
    Nat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::string str(const Nat& v) { return v.get_str(); }
std::string str(const Rat& v) { return v.get_str(); }

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

template <typename Seq, typename ToString>
std::string join(const Seq& xs, const char* sep, ToString&& to_string) {
    std::string out;
    bool first = true;
    for (const auto& x : xs) {
        if (!first) out += sep;
        out += to_string(x);
        first = false;
    }
    return out;
}

void emit_json(const json& payload) { std::printf("%s\n", payload.dump(2).c_str()); }

// ---- seq ------------------------------------------------------------------

struct SeqArgs {
    std::size_t terms = 0;
    unsigned skip = 1;
    unsigned bin_size = 2;
    bool constructive = false;
};

void cmd_seq(const SeqArgs& a, Format fmt) {
    std::vector<Nat> terms;
    if (a.constructive) {
        terms = build_constructive(a.skip, a.bin_size, a.terms);
    } else {
        if (a.skip != 1 || a.bin_size != 2)
            throw std::invalid_argument("recurrence mode covers only --s 1 --b 2; pass --constructive");
        SequenceTable t(a.terms);
        terms.assign(t.terms().begin(), t.terms().end());
    }

    switch (fmt) {
        case Format::plain:
            std::printf("%s\n", join(terms, " ", [](const Nat& v) { return str(v); }).c_str());
            break;
        case Format::csv:
            std::printf("n,a_n\n");
            for (std::size_t i = 0; i < terms.size(); ++i)
                std::printf("%zu,%s\n", i + 1, str(terms[i]).c_str());
            break;
        case Format::json: {
            json payload{{"schema_version", 1}, {"command", "seq"},
                         {"skip", a.skip},      {"bin_size", a.bin_size},
                         {"constructive", a.constructive}};
            json list = json::array();
            for (const Nat& v : terms) list.push_back(str(v));
            payload["terms"] = std::move(list);
            emit_json(payload);
            break;
        }
    }
}

// ---- decompose --------------------------------------------------------------

void cmd_decompose(const std::vector<std::string>& values, Format fmt) {
    SequenceTable table;
    struct Record {
        Nat value;
        Decomposition d;
        std::vector<std::size_t> bins, gaps;
    };
    std::vector<Record> records;
    for (const auto& text : values) {
        Record r;
        r.value = parse_nat(text);
        r.d = decompose(table, r.value);
        Nat check = 0;
        for (std::size_t l : r.d.indices) {
            r.bins.push_back(SequenceTable::bin_of(l));
            check += table.term(l);
        }
        if (!is_legal(r.d.indices) || check != r.value)
            throw invariant_error("decomposition failed its legality/sum cross-check");
        r.gaps = gaps_of(r.d);
        records.push_back(std::move(r));
    }

    const auto size_str = [](std::size_t v) { return std::to_string(v); };
    switch (fmt) {
        case Format::plain:
            for (const auto& r : records)
                std::printf("%s: indices [%s] terms [%s] bins [%s] gaps [%s]\n",
                            str(r.value).c_str(),
                            join(r.d.indices, ",", size_str).c_str(),
                            join(r.d.indices, ",", [&](std::size_t l) { return str(term_closed_form(l)); }).c_str(),
                            join(r.bins, ",", size_str).c_str(),
                            join(r.gaps, ",", size_str).c_str());
            break;
        case Format::csv:
            std::printf("value,k,indices,terms,bins,gaps\n");
            for (const auto& r : records)
                std::printf("%s,%zu,\"%s\",\"%s\",\"%s\",\"%s\"\n", str(r.value).c_str(),
                            r.d.indices.size(),
                            join(r.d.indices, " ", size_str).c_str(),
                            join(r.d.indices, " ", [&](std::size_t l) { return str(term_closed_form(l)); }).c_str(),
                            join(r.bins, " ", size_str).c_str(),
                            join(r.gaps, " ", size_str).c_str());
            break;
        case Format::json: {
            json results = json::array();
            for (const auto& r : records) {
                json item{{"value", str(r.value)}, {"k", r.d.indices.size()}};
                item["indices"] = r.d.indices;
                json terms = json::array();
                for (std::size_t l : r.d.indices) terms.push_back(str(term_closed_form(l)));
                item["terms"] = std::move(terms);
                item["bins"] = r.bins;
                item["gaps"] = r.gaps;
                results.push_back(std::move(item));
            }
            emit_json({{"schema_version", 1}, {"command", "decompose"}, {"results", std::move(results)}});
            break;
        }
    }
}

// ---- count ------------------------------------------------------------------

void cmd_count(std::size_t n, Format fmt) {
    const auto row = summand_count_row_closed(n);
    Nat sum = 0;
    for (const Nat& p : row) sum += p;
    if (sum != term_closed_form(2 * n + 1))
        throw invariant_error("summand count row does not sum to a_{2n+1}");

    switch (fmt) {
        case Format::plain:
            std::printf("%s\n", join(row, " ", [](const Nat& v) { return str(v); }).c_str());
            break;
        case Format::csv:
            std::printf("n,k,p_nk\n");
            for (std::size_t k = 0; k < row.size(); ++k)
                std::printf("%zu,%zu,%s\n", n, k, str(row[k]).c_str());
            break;
        case Format::json: {
            json rows = json::array();
            for (std::size_t k = 0; k < row.size(); ++k)
                rows.push_back({{"k", k}, {"p", str(row[k])}});
            emit_json({{"schema_version", 1},
                       {"command", "count"},
                       {"n", n},
                       {"row_sum", str(sum)},
                       {"rows", std::move(rows)}});
            break;
        }
    }
}

// ---- stats ------------------------------------------------------------------

void cmd_stats(std::size_t n, bool diagnostics, const std::vector<double>& grid, Format fmt) {
    const Rat mean = exact_mean(n);
    const Rat variance = exact_variance(n);
    if (variance != variance_closed_form(n))
        throw invariant_error("pmf variance does not match the closed form");
    const auto [asym_mean, asym_var] = asymptotic_moments(n);

    DistributionSummary diag;
    if (diagnostics) {
        diag = gaussian_diagnostics(n, grid);
        Rat total(0);
        for (const Rat& p : diag.pmf) total += p;
        if (total != 1) throw invariant_error("pmf does not sum to one");
    }

    switch (fmt) {
        case Format::plain:
            std::printf("n %zu\n", n);
            std::printf("mean %s (%s)\n", str(mean).c_str(), fmt_double(to_double(mean)).c_str());
            std::printf("variance %s (%s)\n", str(variance).c_str(),
                        fmt_double(to_double(variance)).c_str());
            std::printf("asymptotic_mean %s\n", fmt_double(asym_mean).c_str());
            std::printf("asymptotic_variance %s\n", fmt_double(asym_var).c_str());
            if (diagnostics) {
                std::printf("ks_to_normal %s\n", fmt_double(diag.ks_to_normal).c_str());
                std::printf("mgf_log_residual %s\n", fmt_double(diag.mgf_log_residual).c_str());
            }
            break;
        case Format::csv:
            if (!diagnostics) {
                std::printf("n,mean,variance,mean_float,variance_float,asymptotic_mean,asymptotic_variance\n");
                std::printf("%zu,%s,%s,%s,%s,%s,%s\n", n, str(mean).c_str(), str(variance).c_str(),
                            fmt_double(to_double(mean)).c_str(),
                            fmt_double(to_double(variance)).c_str(), fmt_double(asym_mean).c_str(),
                            fmt_double(asym_var).c_str());
            } else {
                const double mu = to_double(mean);
                const double sigma = std::sqrt(to_double(variance));
                std::printf("k,p_exact_num,p_exact_den,p_float,normalized_k\n");
                for (std::size_t k = 0; k < diag.pmf.size(); ++k)
                    std::printf("%zu,%s,%s,%s,%s\n", k,
                                diag.pmf[k].get_num().get_str().c_str(),
                                diag.pmf[k].get_den().get_str().c_str(),
                                fmt_double(to_double(diag.pmf[k])).c_str(),
                                fmt_double((static_cast<double>(k) - mu) / sigma).c_str());
            }
            break;
        case Format::json: {
            json payload{{"schema_version", 1},
                         {"command", "stats"},
                         {"n", n},
                         {"mean", str(mean)},
                         {"mean_float", to_double(mean)},
                         {"variance", str(variance)},
                         {"variance_float", to_double(variance)},
                         {"asymptotic_mean", asym_mean},
                         {"asymptotic_variance", asym_var}};
            if (diagnostics) {
                const double mu = to_double(mean);
                const double sigma = std::sqrt(to_double(variance));
                json d{{"t_grid", grid},
                       {"ks_to_normal", diag.ks_to_normal},
                       {"mgf_log_residual", diag.mgf_log_residual}};
                json pmf = json::array();
                for (std::size_t k = 0; k < diag.pmf.size(); ++k)
                    pmf.push_back({{"k", k},
                                   {"p", str(diag.pmf[k])},
                                   {"p_float", to_double(diag.pmf[k])},
                                   {"normalized_k", (static_cast<double>(k) - mu) / sigma}});
                d["pmf"] = std::move(pmf);
                payload["diagnostics"] = std::move(d);
            }
            emit_json(payload);
            break;
        }
    }
}

// ---- gaps -------------------------------------------------------------------

void cmd_gaps(std::size_t n, const std::string& method, Format fmt) {
    GapHistogram h;
    if (method == "formula") {
        h = gap_histogram_formula(n);
    } else if (method == "enumerate") {
        SequenceTable table;
        h = gap_histogram_bruteforce(table, n);
        if (h.total_gaps != total_gap_count(n))
            throw invariant_error("enumerated gap total does not match the moment identity");
    } else {
        throw std::invalid_argument("unknown method '" + method + "' (expected formula or enumerate)");
    }

    switch (fmt) {
        case Format::plain: {
            std::string body = join(h.counts, ", ", [](const auto& entry) {
                return std::to_string(entry.first) + ":" + str(entry.second);
            });
            std::printf("{%s}\n", body.c_str());
            break;
        }
        case Format::csv:
            std::printf("g,count,p_n_float,p_limit_float\n");
            for (const auto& [g, c] : h.counts)
                std::printf("%zu,%s,%s,%s\n", g, str(c).c_str(),
                            fmt_double(to_double(ratio(c, h.total_gaps))).c_str(),
                            fmt_double(to_double(gap_probability_limit(g))).c_str());
            break;
        case Format::json: {
            json rows = json::array();
            for (const auto& [g, c] : h.counts)
                rows.push_back({{"g", g},
                                {"count", str(c)},
                                {"p_n", str(ratio(c, h.total_gaps))},
                                {"p_n_float", to_double(ratio(c, h.total_gaps))},
                                {"p_limit", str(gap_probability_limit(g))},
                                {"p_limit_float", to_double(gap_probability_limit(g))}});
            emit_json({{"schema_version", 1},
                       {"command", "gaps"},
                       {"n", n},
                       {"total_gaps", str(h.total_gaps)},
                       {"histogram", std::move(rows)}});
            break;
        }
    }
}

// ---- sample -----------------------------------------------------------------

struct SampleArgs {
    std::uint64_t count = 0;
    std::string bound;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

void cmd_sample(const SampleArgs& a, Format fmt) {
    SampleConfig cfg;
    cfg.count = a.count;
    cfg.bound = parse_nat(a.bound);
    cfg.seed = a.seed;
    cfg.workers = a.workers;

    SequenceTable table;
    const SampleReport r = run_experiment(cfg, table);
    std::uint64_t total = 0;
    for (const auto& [k, c] : r.histogram) total += c;
    if (total != cfg.count) throw invariant_error("histogram does not account for every draw");

    switch (fmt) {
        case Format::plain:
            std::printf("count %llu\n", static_cast<unsigned long long>(cfg.count));
            std::printf("bound %s\n", str(cfg.bound).c_str());
            std::printf("seed %llu workers %u\n", static_cast<unsigned long long>(cfg.seed),
                        cfg.workers);
            std::printf("n_effective %zu\n", r.n_effective);
            std::printf("empirical_mean %s\n", fmt_double(r.empirical_mean).c_str());
            std::printf("empirical_std %s\n", fmt_double(r.empirical_std).c_str());
            std::printf("predicted_mean %s\n", fmt_double(r.predicted_mean).c_str());
            std::printf("predicted_std %s\n", fmt_double(r.predicted_std).c_str());
            break;
        case Format::csv:
            std::printf("k,count,frequency\n");
            for (const auto& [k, c] : r.histogram)
                std::printf("%zu,%llu,%s\n", k, static_cast<unsigned long long>(c),
                            fmt_double(static_cast<double>(c) / static_cast<double>(cfg.count)).c_str());
            break;
        case Format::json: {
            json hist = json::array();
            for (const auto& [k, c] : r.histogram)
                hist.push_back({{"k", k},
                                {"count", c},
                                {"frequency", static_cast<double>(c) / static_cast<double>(cfg.count)}});
            emit_json({{"schema_version", 1},
                       {"command", "sample"},
                       {"count", cfg.count},
                       {"bound", str(cfg.bound)},
                       {"seed", cfg.seed},
                       {"workers", cfg.workers},
                       {"n_effective", r.n_effective},
                       {"empirical_mean", r.empirical_mean},
                       {"empirical_std", r.empirical_std},
                       {"predicted_mean", r.predicted_mean},
                       {"predicted_std", r.predicted_std},
                       {"histogram", std::move(hist)}});
            break;
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kentucky-2 ((1,2)-Generacci) sequence toolkit"};
    app.require_subcommand(1);

    std::string format = "plain";
    if (const char* env = std::getenv("KENTUCKY2_FORMAT")) format = env;
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format: json, csv or plain");
    };

    SeqArgs seq_args;
    auto* seq = app.add_subcommand("seq", "Print sequence terms");
    seq->add_option("--terms", seq_args.terms, "How many terms")->required()
        ->check(CLI::PositiveNumber);
    seq->add_option("--s", seq_args.skip, "Bins to skip around a chosen bin");
    seq->add_option("--b", seq_args.bin_size, "Bin size");
    seq->add_flag("--constructive", seq_args.constructive,
                  "Build by the adjoining procedure instead of the recurrence");
    add_format(seq);

    std::vector<std::string> decompose_values;
    auto* dec = app.add_subcommand("decompose", "Decompose values into legal summands");
    dec->add_option("values", decompose_values, "Values (decimal or base^exp)")->required();
    add_format(dec);

    std::size_t count_n = 0;
    auto* cnt = app.add_subcommand("count", "Summand-count row p(n,k) for k = 0..floor((n+1)/2)");
    cnt->add_option("--n", count_n, "Row index")->required();
    add_format(cnt);

    std::size_t stats_n = 0;
    bool diagnostics = false;
    std::vector<double> t_grid{-2.0, -1.0, 1.0, 2.0};
    auto* st = app.add_subcommand("stats", "Exact and asymptotic moments of the summand count");
    st->add_option("--n", stats_n, "Row index")->required();
    st->add_flag("--diagnostics", diagnostics, "Add normal-convergence diagnostics and the pmf");
    st->add_option("--t", t_grid, "MGF grid points in [-2, 2]");
    add_format(st);

    std::size_t gaps_n = 0;
    std::string gaps_method = "formula";
    auto* gp = app.add_subcommand("gaps", "Exact gap-length histogram over [0, a_{2n+1})");
    gp->add_option("--n", gaps_n, "Bin count")->required()->check(CLI::PositiveNumber);
    gp->add_option("--method", gaps_method, "formula or enumerate");
    add_format(gp);

    SampleArgs sample_args;
    auto* sm = app.add_subcommand("sample", "Monte Carlo summand-count experiment");
    sm->add_option("--count", sample_args.count, "Number of draws")->required()
        ->check(CLI::PositiveNumber);
    sm->add_option("--bound", sample_args.bound, "Exclusive upper bound (decimal or base^exp)")
        ->required();
    sm->add_option("--seed", sample_args.seed, "RNG seed");
    sm->add_option("--workers", sample_args.workers, "Worker threads")->check(CLI::PositiveNumber);
    add_format(sm);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format fmt = parse_format(format);
        if (seq->parsed()) cmd_seq(seq_args, fmt);
        if (dec->parsed()) cmd_decompose(decompose_values, fmt);
        if (cnt->parsed()) cmd_count(count_n, fmt);
        if (st->parsed()) cmd_stats(stats_n, diagnostics, t_grid, fmt);
        if (gp->parsed()) cmd_gaps(gaps_n, gaps_method, fmt);
        if (sm->parsed()) cmd_sample(sample_args, fmt);
    } catch (const budget_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const invariant_error& e) {
        std::fprintf(stderr, "internal cross-check failed: %s\n", e.what());
        return 4;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
