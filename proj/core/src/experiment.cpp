#include "sinrsim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "sinrsim/detail/parallel.hpp"
#include "sinrsim/fit.hpp"
#include "sinrsim/generators.hpp"
#include "sinrsim/min_colors.hpp"
#include "sinrsim/sinr.hpp"
#include "sinrsim/witness.hpp"

namespace sinrsim {

namespace {

using nlohmann::ordered_json;

SinrParams params_of(const ExperimentSpec& spec) {
    try {
        return SinrParams(spec.alpha, spec.beta);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

bool perfect_square(std::size_t n, std::size_t* side_out = nullptr) {
    const auto side = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n))));
    if (side * side != n) return false;
    if (side_out) *side_out = side;
    return true;
}

std::vector<std::size_t> sorted_sizes(const ExperimentSpec& spec) {
    std::vector<std::size_t> sizes = spec.sizes;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    return sizes;
}

std::string format_fraction(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

struct Outcome {
    bool connected = false;
    std::size_t edges = 0;
    std::string note;
    bool witness_found = false;
};

ExperimentRecord base_record(const ExperimentSpec& spec, std::size_t n, int k, int colors,
                             int trial) {
    ExperimentRecord record;
    record.command = command_name(spec.command);
    record.n = n;
    record.k = k;
    record.colors = colors;
    record.trial = trial;
    record.seed = spec.seed;
    return record;
}

void run_grid(const ExperimentSpec& spec, const RecordSink& sink) {
    const SinrParams params = params_of(spec);
    const bool two_d = spec.command == Command::grid2d;
    for (std::size_t n : sorted_sizes(spec)) {
        std::size_t side = 0;
        if (two_d) perfect_square(n, &side);
        const NodeSet nodes = two_d ? gen::grid_2d(n) : gen::grid_1d(n);
        const int limit = static_cast<int>(two_d ? side : n);

        std::vector<int> ks;
        if (spec.k) {
            ks.push_back(*spec.k);
        } else {
            for (int k = 1; k <= std::min(*spec.k_max, limit); ++k) ks.push_back(k);
        }

        std::vector<Outcome> outcomes(ks.size());
        std::optional<int> k_min;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            const Coloring coloring = two_d ? gen::regular_coloring_2d(side, ks[i])
                                            : gen::regular_coloring_1d(n, ks[i]);
            BuildStats stats;
            const SinrGraph graph =
                build_graph(nodes, coloring, params, spec.threads, spec.verbose ? &stats : nullptr);
            outcomes[i].connected = is_strongly_connected(graph);
            outcomes[i].edges = graph.edge_count();
            if (spec.verbose && stats.near_ties.load() > 0) {
                outcomes[i].note =
                    "threshold ties within tolerance: " + std::to_string(stats.near_ties.load());
            }
            if (outcomes[i].connected && !k_min) k_min = ks[i];
        }
        for (std::size_t i = 0; i < ks.size(); ++i) {
            ExperimentRecord record =
                base_record(spec, n, ks[i], two_d ? ks[i] * ks[i] : ks[i], 0);
            record.connected = outcomes[i].connected;
            record.edges = outcomes[i].edges;
            record.success_fraction = outcomes[i].connected ? 1.0 : 0.0;
            record.k_min = k_min;
            record.note = outcomes[i].note;
            sink(record);
        }
    }
}

void run_random(const ExperimentSpec& spec, const RecordSink& sink) {
    const SinrParams params = params_of(spec);
    for (std::size_t n : sorted_sizes(spec)) {
        std::vector<NodeSet> instances;
        instances.reserve(static_cast<std::size_t>(spec.trials));
        for (int t = 0; t < spec.trials; ++t) {
            instances.push_back(
                gen::sample_uniform_1d({n, spec.seed, static_cast<std::uint64_t>(t)}));
        }

        std::vector<int> ks;
        if (spec.k) {
            ks.push_back(*spec.k);
        } else {
            for (int k = 1; k <= std::min<int>(*spec.k_max, static_cast<int>(n)); ++k) {
                ks.push_back(k);
            }
        }

        const std::size_t trials = static_cast<std::size_t>(spec.trials);
        std::vector<Outcome> outcomes(ks.size() * trials);
        detail::parallel_for(outcomes.size(), spec.threads, [&](std::size_t task) {
            const int k = ks[task / trials];
            const auto trial = task % trials;
            const Coloring coloring = gen::regular_coloring_1d(n, k);
            const SinrGraph graph = build_graph(instances[trial], coloring, params, 1);
            outcomes[task].connected = is_strongly_connected(graph);
            outcomes[task].edges = graph.edge_count();
        });

        std::vector<double> success(ks.size(), 0.0);
        std::optional<int> k_min;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            std::size_t connected = 0;
            for (std::size_t t = 0; t < trials; ++t) {
                connected += outcomes[i * trials + t].connected ? 1 : 0;
            }
            success[i] = static_cast<double>(connected) / static_cast<double>(trials);
            if (!k_min && success[i] >= success_threshold) k_min = ks[i];
        }
        for (std::size_t i = 0; i < ks.size(); ++i) {
            for (std::size_t t = 0; t < trials; ++t) {
                ExperimentRecord record =
                    base_record(spec, n, ks[i], ks[i], static_cast<int>(t));
                record.connected = outcomes[i * trials + t].connected;
                record.edges = outcomes[i * trials + t].edges;
                record.success_fraction = success[i];
                record.k_min = k_min;
                sink(record);
            }
        }
    }
}

void run_witness(const ExperimentSpec& spec, const RecordSink& sink) {
    const SinrParams params = params_of(spec);
    const int k = *spec.k;
    for (std::size_t n : sorted_sizes(spec)) {
        const std::size_t trials = static_cast<std::size_t>(spec.trials);
        std::vector<Outcome> outcomes(trials);
        const bool expseq_possible = n >= (std::size_t{1} << spec.h_min);
        detail::parallel_for(trials, spec.threads, [&](std::size_t t) {
            const NodeSet nodes = gen::sample_uniform_1d({n, spec.seed, t});
            const Coloring coloring = gen::regular_coloring_1d(n, k);
            const SinrGraph graph = build_graph(nodes, coloring, params, 1);
            Outcome& outcome = outcomes[t];
            outcome.connected = is_strongly_connected(graph);
            outcome.edges = graph.edge_count();

            std::ostringstream note;
            if (auto gap = analysis::detect_gap_condition(nodes, k, params.beta)) {
                outcome.witness_found = true;
                note << "gap x=" << gap->x << " ell=" << gap->ell << " counts=" << gap->counts[0]
                     << "/" << gap->counts[1] << "/" << gap->counts[2];
            }
            if (expseq_possible) {
                if (auto seq = analysis::detect_exponential_sequence(nodes, spec.epsilon,
                                                                     spec.h_min)) {
                    outcome.witness_found = true;
                    if (note.tellp() > 0) note << "; ";
                    note << "expseq h=" << seq->h << " a=" << seq->a << " b=" << seq->b;
                }
            }
            outcome.note = note.str();
        });

        std::size_t found = 0;
        for (const auto& outcome : outcomes) found += outcome.witness_found ? 1 : 0;
        const double rate = static_cast<double>(found) / static_cast<double>(trials);
        for (std::size_t t = 0; t < trials; ++t) {
            ExperimentRecord record = base_record(spec, n, k, k, static_cast<int>(t));
            record.connected = outcomes[t].connected;
            record.edges = outcomes[t].edges;
            record.success_fraction = rate;  // witness detection rate
            record.note = outcomes[t].note;
            sink(record);
        }
    }
}

void run_oracle(const ExperimentSpec& spec, const RecordSink& sink) {
    const SinrParams params = params_of(spec);
    for (std::size_t n : sorted_sizes(spec)) {
        const int kcap = std::min<int>(spec.k_max.value_or(static_cast<int>(n)),
                                       static_cast<int>(n));
        std::vector<Outcome> outcomes(static_cast<std::size_t>(spec.trials));
        std::vector<std::optional<int>> exhaustive(outcomes.size()), regular(outcomes.size());
        detail::parallel_for(outcomes.size(), spec.threads, [&](std::size_t t) {
            const NodeSet nodes = gen::sample_uniform_1d({n, spec.seed, t});
            const auto exh = analysis::min_colors_exhaustive(nodes, params, kcap, 1);
            const auto reg =
                analysis::min_k_regular(nodes, params, analysis::Family::regular_1d, kcap, 1);
            exhaustive[t] = exh.k_min;
            regular[t] = reg.k_min;
            Outcome& outcome = outcomes[t];
            // dominance: the exhaustive optimum can never exceed the regular one
            outcome.connected =
                !regular[t] || (exhaustive[t] && *exhaustive[t] <= *regular[t]);
            if (reg.k_min) {
                const SinrGraph graph = build_graph(
                    nodes, gen::regular_coloring_1d(n, *reg.k_min), params, 1);
                outcome.edges = graph.edge_count();
            }
            std::ostringstream note;
            note << "exhaustive=" << (exh.k_min ? std::to_string(*exh.k_min) : "none")
                 << " regular=" << (reg.k_min ? std::to_string(*reg.k_min) : "none");
            outcome.note = note.str();
        });

        std::size_t dominant = 0;
        for (const auto& outcome : outcomes) dominant += outcome.connected ? 1 : 0;
        for (std::size_t t = 0; t < outcomes.size(); ++t) {
            ExperimentRecord record =
                base_record(spec, n, regular[t].value_or(0), regular[t].value_or(0),
                            static_cast<int>(t));
            record.connected = outcomes[t].connected;
            record.edges = outcomes[t].edges;
            record.success_fraction =
                static_cast<double>(dominant) / static_cast<double>(outcomes.size());
            record.k_min = exhaustive[t];
            record.note = outcomes[t].note;
            sink(record);
        }
    }
}

void run_scaling(const ExperimentSpec& spec, const RecordSink& sink) {
    const SinrParams params = params_of(spec);
    const auto family =
        spec.dim == 1 ? analysis::Family::regular_1d : analysis::Family::regular_2d;
    std::vector<ExperimentRecord> rows;
    std::vector<std::pair<double, double>> points;
    for (std::size_t n : sorted_sizes(spec)) {
        std::size_t side = 0;
        if (spec.dim == 2) perfect_square(n, &side);
        const NodeSet nodes = spec.dim == 2 ? gen::grid_2d(n) : gen::grid_1d(n);
        const int limit = static_cast<int>(spec.dim == 2 ? side : n);
        const int kcap = std::min(*spec.k_max, limit);
        const auto result = analysis::min_k_regular(nodes, params, family, kcap, spec.threads);

        ExperimentRecord record = base_record(spec, n, result.k_min.value_or(0),
                                              result.k_min
                                                  ? analysis::colors_for(family, *result.k_min)
                                                  : 0,
                                              0);
        record.connected = result.k_min.has_value();
        record.success_fraction = record.connected ? 1.0 : 0.0;
        record.k_min = result.k_min;
        if (result.k_min) {
            const Coloring coloring = spec.dim == 2
                                          ? gen::regular_coloring_2d(side, *result.k_min)
                                          : gen::regular_coloring_1d(n, *result.k_min);
            record.edges = build_graph(nodes, coloring, params, spec.threads).edge_count();
            points.emplace_back(static_cast<double>(n), static_cast<double>(record.colors));
        }
        rows.push_back(std::move(record));
    }

    if (points.size() >= 3) {
        const auto fit = analysis::fit_scaling(points);
        std::ostringstream note;
        note << "fit over min colors: power-law exponent " << fit.power_law.slope << " (stderr "
             << fit.power_law.slope_stderr << ", rss_k " << fit.power_rss_k
             << "), log coefficient " << fit.log_model.slope << " (stderr "
             << fit.log_model.slope_stderr << ", rss_k " << fit.log_rss_k << ")";
        rows.back().note = note.str();
    }
    for (const auto& record : rows) sink(record);
}

}  // namespace

const char* command_name(Command command) {
    switch (command) {
        case Command::grid1d: return "grid1d";
        case Command::grid2d: return "grid2d";
        case Command::random1d: return "random1d";
        case Command::witness: return "witness";
        case Command::oracle: return "oracle";
        case Command::scaling: return "scaling";
    }
    return "unknown";
}

bool ExperimentRecord::operator==(const ExperimentRecord& other) const {
    return command == other.command && n == other.n && k == other.k && colors == other.colors &&
           trial == other.trial && connected == other.connected && edges == other.edges &&
           success_fraction == other.success_fraction && k_min == other.k_min &&
           seed == other.seed;
}

void validate_spec(const ExperimentSpec& spec) {
    if (spec.sizes.empty()) throw UsageError("at least one --n is required");
    params_of(spec);
    if (spec.trials < 1) throw UsageError("--trials must be at least 1");
    if (spec.threads < 0) throw UsageError("--threads must be nonnegative");
    if (spec.k && spec.k_max) throw UsageError("--k and --kmax are mutually exclusive");
    if (spec.k && *spec.k < 1) throw UsageError("--k must be positive");
    if (spec.k_max && *spec.k_max < 1) throw UsageError("--kmax must be positive");

    const bool needs_square = spec.command == Command::grid2d ||
                              (spec.command == Command::scaling && spec.dim == 2);
    if (needs_square) {
        for (std::size_t n : spec.sizes) {
            if (!perfect_square(n)) {
                throw UsageError("n = " + std::to_string(n) + " is not a perfect square");
            }
        }
    }

    switch (spec.command) {
        case Command::grid1d:
        case Command::grid2d:
        case Command::random1d:
            if (!spec.k && !spec.k_max) throw UsageError("specify --k or --kmax");
            break;
        case Command::witness:
            if (!spec.k) throw UsageError("witness requires a fixed --k");
            if (!(spec.epsilon > 0.0 && spec.epsilon < 1.0 / 3.0)) {
                throw UsageError("--epsilon must lie in (0, 1/3)");
            }
            if (spec.h_min < 2) throw UsageError("--hmin must be at least 2");
            break;
        case Command::oracle:
            if (spec.k) throw UsageError("oracle searches all k; use --kmax to cap");
            for (std::size_t n : spec.sizes) {
                if (n > 10) throw UsageError("oracle is limited to n <= 10");
            }
            break;
        case Command::scaling: {
            if (spec.dim != 1 && spec.dim != 2) throw UsageError("scaling requires --dim 1 or 2");
            if (!spec.k_max) throw UsageError("scaling requires --kmax");
            if (spec.k) throw UsageError("scaling searches k; --k is not accepted");
            std::vector<std::size_t> distinct = spec.sizes;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            if (distinct.size() < 3) throw UsageError("scaling needs at least 3 distinct sizes");
            break;
        }
    }

    if (spec.command == Command::grid2d && spec.k) {
        for (std::size_t n : spec.sizes) {
            std::size_t side = 0;
            perfect_square(n, &side);
            if (static_cast<std::size_t>(*spec.k) > side) {
                throw UsageError("--k exceeds the grid side of n = " + std::to_string(n));
            }
        }
    }
    if ((spec.command == Command::random1d || spec.command == Command::witness ||
         spec.command == Command::oracle) &&
        spec.dim == 2) {
        throw UsageError("random instances are 1D only");
    }
}

void run(const ExperimentSpec& spec, const RecordSink& sink) {
    validate_spec(spec);
    switch (spec.command) {
        case Command::grid1d:
        case Command::grid2d:
            run_grid(spec, sink);
            break;
        case Command::random1d:
            run_random(spec, sink);
            break;
        case Command::witness:
            run_witness(spec, sink);
            break;
        case Command::oracle:
            run_oracle(spec, sink);
            break;
        case Command::scaling:
            run_scaling(spec, sink);
            break;
    }
}

std::vector<ExperimentRecord> run(const ExperimentSpec& spec) {
    std::vector<ExperimentRecord> records;
    run(spec, [&](const ExperimentRecord& record) { records.push_back(record); });
    return records;
}

std::string csv_header() {
    return "command,n,k,colors,trial,connected,edges,success_fraction,k_min,seed\n";
}

std::string csv_row(const ExperimentRecord& r) {
    std::ostringstream row;
    row << r.command << ',' << r.n << ',' << r.k << ',' << r.colors << ',' << r.trial << ','
        << (r.connected ? "true" : "false") << ',' << r.edges << ','
        << format_fraction(r.success_fraction) << ','
        << (r.k_min ? std::to_string(*r.k_min) : "") << ',' << r.seed << '\n';
    return row.str();
}

namespace {

ordered_json record_to_json(const ExperimentRecord& r) {
    ordered_json j;
    j["command"] = r.command;
    j["n"] = r.n;
    j["k"] = r.k;
    j["colors"] = r.colors;
    j["trial"] = r.trial;
    j["connected"] = r.connected;
    j["edges"] = r.edges;
    j["success_fraction"] = r.success_fraction;
    if (r.k_min) {
        j["k_min"] = *r.k_min;
    } else {
        j["k_min"] = nullptr;
    }
    j["seed"] = r.seed;
    return j;
}

}  // namespace

std::string emit(const std::vector<ExperimentRecord>& records, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::string text = csv_header();
        for (const auto& record : records) text += csv_row(record);
        return text;
    }
    ordered_json array = ordered_json::array();
    for (const auto& record : records) array.push_back(record_to_json(record));
    return array.dump() + "\n";
}

std::vector<ExperimentRecord> parse_records(const std::string& text) {
    std::vector<ExperimentRecord> records;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        for (const auto& j : ordered_json::parse(text)) {
            ExperimentRecord r;
            r.command = j.at("command").get<std::string>();
            r.n = j.at("n").get<std::size_t>();
            r.k = j.at("k").get<int>();
            r.colors = j.at("colors").get<int>();
            r.trial = j.at("trial").get<int>();
            r.connected = j.at("connected").get<bool>();
            r.edges = j.at("edges").get<std::size_t>();
            r.success_fraction = j.at("success_fraction").get<double>();
            if (!j.at("k_min").is_null()) r.k_min = j.at("k_min").get<int>();
            r.seed = j.at("seed").get<std::uint64_t>();
            records.push_back(std::move(r));
        }
        return records;
    }

    std::istringstream lines(text);
    std::string line;
    bool header = true;
    while (std::getline(lines, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string field;
        std::vector<std::string> values;
        while (std::getline(fields, field, ',')) values.push_back(field);
        if (line.back() == ',') values.push_back("");
        if (values.size() != 10) throw std::invalid_argument("CSV row with wrong arity: " + line);
        ExperimentRecord r;
        r.command = values[0];
        r.n = std::stoull(values[1]);
        r.k = std::stoi(values[2]);
        r.colors = std::stoi(values[3]);
        r.trial = std::stoi(values[4]);
        r.connected = values[5] == "true";
        r.edges = std::stoull(values[6]);
        r.success_fraction = std::stod(values[7]);
        if (!values[8].empty()) r.k_min = std::stoi(values[8]);
        r.seed = std::stoull(values[9]);
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace sinrsim
