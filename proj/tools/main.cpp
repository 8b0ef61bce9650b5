// Experiment harness for SINR-graph connectivity: builds grid or random
// instances, colors them, and reports connectivity, minimum color counts,
// witnesses, and scaling fits as CSV or JSON records.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sinrsim/experiment.hpp"
#include "sinrsim/generators.hpp"

namespace {

using sinrsim::Command;
using sinrsim::ExperimentSpec;

struct CliValues {
    double alpha = 2.0;
    double beta = 1.0;
    std::vector<std::size_t> sizes;
    int k = 0;
    int kmax = 0;
    int trials = 1;
    std::uint64_t seed = 1;
    double epsilon = 0.1;
    int hmin = 3;
    int dim = 0;
    std::string format = "csv";
    std::string out;
    int threads = 0;
    bool verbose = false;
    std::string config;
};

void add_common_options(CLI::App* sub, CliValues& v) {
    sub->add_option("--alpha", v.alpha, "Path-loss exponent (>= 1)");
    sub->add_option("--beta", v.beta, "SINR reception threshold (>= 1)");
    sub->add_option("--n", v.sizes, "Instance size; repeatable or comma-separated")
        ->delimiter(',');
    sub->add_option("--k", v.k, "Fixed coloring parameter (colors in 1D, spacing in 2D)");
    sub->add_option("--kmax", v.kmax, "Search k = 1..kmax instead of a fixed k");
    sub->add_option("--trials", v.trials, "Trials per size for random commands");
    sub->add_option("--seed", v.seed, "Master seed; trials derive substreams from it");
    sub->add_option("--epsilon", v.epsilon, "Exponential-sequence band width, in (0, 1/3)");
    sub->add_option("--hmin", v.hmin, "Minimum exponential-sequence length (>= 2)");
    sub->add_option("--dim", v.dim, "Instance dimension for scaling (1 or 2)");
    sub->add_option("--format", v.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", v.out, "Output path (default stdout)");
    sub->add_option("--threads", v.threads, "Worker threads (0 = hardware default)");
    sub->add_flag("--verbose", v.verbose, "Metadata, witness and tie notes on stderr");
    sub->add_option("--config", v.config, "JSON config file mirroring these flags");
}

// Flags win over the config file; the config fills in whatever was not
// given on the command line.
void apply_config(const CLI::App& sub, CliValues& v) {
    std::ifstream in(v.config);
    if (!in) throw sinrsim::UsageError("cannot open config file: " + v.config);
    std::stringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json j = nlohmann::json::parse(buffer.str(), nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw sinrsim::UsageError("config file is not a JSON object: " + v.config);
    }
    const auto absent = [&sub](const char* flag) { return sub.count(flag) == 0; };
    for (const auto& [key, value] : j.items()) {
        if (key == "alpha" && absent("--alpha")) v.alpha = value.get<double>();
        else if (key == "beta" && absent("--beta")) v.beta = value.get<double>();
        else if (key == "n" && absent("--n")) v.sizes = value.get<std::vector<std::size_t>>();
        else if (key == "k" && absent("--k")) v.k = value.get<int>();
        else if (key == "kmax" && absent("--kmax")) v.kmax = value.get<int>();
        else if (key == "trials" && absent("--trials")) v.trials = value.get<int>();
        else if (key == "seed" && absent("--seed")) v.seed = value.get<std::uint64_t>();
        else if (key == "epsilon" && absent("--epsilon")) v.epsilon = value.get<double>();
        else if (key == "hmin" && absent("--hmin")) v.hmin = value.get<int>();
        else if (key == "dim" && absent("--dim")) v.dim = value.get<int>();
        else if (key == "format" && absent("--format")) v.format = value.get<std::string>();
        else if (key == "out" && absent("--out")) v.out = value.get<std::string>();
        else if (key == "threads" && absent("--threads")) v.threads = value.get<int>();
        else if (key == "verbose" && absent("--verbose")) v.verbose = value.get<bool>();
        else if (key == "alpha" || key == "beta" || key == "n" || key == "k" || key == "kmax" ||
                 key == "trials" || key == "seed" || key == "epsilon" || key == "hmin" ||
                 key == "dim" || key == "format" || key == "out" || key == "threads" ||
                 key == "verbose") {
            // flag took precedence
        } else {
            throw sinrsim::UsageError("unknown config key: " + key);
        }
    }
}

ExperimentSpec build_spec(Command command, const CLI::App& sub, const CliValues& v) {
    ExperimentSpec spec;
    spec.command = command;
    spec.alpha = v.alpha;
    spec.beta = v.beta;
    spec.sizes = v.sizes;
    if (sub.count("--k") > 0 || v.k > 0) spec.k = v.k;
    if (sub.count("--kmax") > 0 || v.kmax > 0) spec.k_max = v.kmax;
    spec.trials = v.trials;
    spec.seed = v.seed;
    spec.epsilon = v.epsilon;
    spec.h_min = v.hmin;
    spec.dim = v.dim;
    spec.format = v.format == "json" ? sinrsim::OutputFormat::json : sinrsim::OutputFormat::csv;
    spec.out = v.out;
    spec.threads = v.threads;
    spec.verbose = v.verbose;
    return spec;
}

std::string utc_now() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

int run_spec(const ExperimentSpec& spec) {
    sinrsim::validate_spec(spec);  // fail before any output is written

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!spec.out.empty()) {
        file.open(spec.out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output file: " << spec.out << "\n";
            return 1;
        }
        out = &file;
    }

    if (spec.verbose) {
        std::cerr << "# sinrsim " << sinrsim::version << " rng=" << sinrsim::gen::rng_id
                  << " time=" << utc_now() << "\n";
    }

    std::vector<sinrsim::ExperimentRecord> collected;  // json is emitted whole
    const bool csv = spec.format == sinrsim::OutputFormat::csv;
    if (csv) *out << sinrsim::csv_header();
    sinrsim::run(spec, [&](const sinrsim::ExperimentRecord& record) {
        if (csv) {
            *out << sinrsim::csv_row(record);
            out->flush();
        } else {
            collected.push_back(record);
        }
        if (spec.verbose && !record.note.empty()) {
            std::cerr << "# " << record.command << " n=" << record.n << " trial=" << record.trial
                      << ": " << record.note << "\n";
        }
    });
    if (!csv) *out << sinrsim::emit(collected, sinrsim::OutputFormat::json);
    out->flush();

    if (!*out) {
        std::cerr << "error: writing output failed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connectivity experiments for wireless networks under the uniform-power "
                 "SINR model"};
    app.set_version_flag("--version", std::string("sinrsim ") + sinrsim::version);
    app.require_subcommand(1);

    CliValues values;
    struct SubEntry {
        Command command;
        CLI::App* sub;
    };
    std::vector<SubEntry> subs = {
        {Command::grid1d, app.add_subcommand("grid1d", "Regular colorings of the 1D grid")},
        {Command::grid2d, app.add_subcommand("grid2d", "Regular colorings of the 2D grid")},
        {Command::random1d,
         app.add_subcommand("random1d", "Uniform random points in [0,1], regular colorings")},
        {Command::witness,
         app.add_subcommand("witness", "Run disconnection-witness detectors on random instances")},
        {Command::oracle,
         app.add_subcommand("oracle", "Exhaustive minimum colors vs regular colorings (n <= 10)")},
        {Command::scaling,
         app.add_subcommand("scaling", "Minimum regular colors across sizes, with growth fits")},
    };
    for (auto& entry : subs) add_common_options(entry.sub, values);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (const auto& entry : subs) {
            if (entry.sub->parsed()) {
                if (!values.config.empty()) apply_config(*entry.sub, values);
                const ExperimentSpec spec = build_spec(entry.command, *entry.sub, values);
                return run_spec(spec);
            }
        }
        std::cerr << "error: no command given\n";
        return 2;
    } catch (const sinrsim::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
