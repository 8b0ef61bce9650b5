#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sinrsim {

inline constexpr const char* version = "0.1.0";

/// Success-rate threshold used when a random experiment searches for the
/// smallest k: k_min is the smallest k whose connected fraction reaches it.
inline constexpr double success_threshold = 0.95;

/// A spec problem (bad flags, malformed sizes); the CLI maps it to exit 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Command { grid1d, grid2d, random1d, witness, oracle, scaling };
enum class OutputFormat { json, csv };

const char* command_name(Command command);

struct ExperimentSpec {
    Command command = Command::grid1d;
    double alpha = 2.0;
    double beta = 1.0;
    std::vector<std::size_t> sizes;
    std::optional<int> k;      // fixed parameter (colors in 1D, spacing in 2D)
    std::optional<int> k_max;  // search range 1..k_max instead
    int trials = 1;
    std::uint64_t seed = 1;
    double epsilon = 0.1;  // exponential-sequence band width
    int h_min = 3;         // minimum exponential-sequence length
    int dim = 0;           // scaling only: 1 or 2
    OutputFormat format = OutputFormat::csv;
    std::string out;  // output path; empty means stdout
    int threads = 0;  // 0 = hardware default
    bool verbose = false;
};

/// One row of experiment output. Exactly the fields of the wire formats;
/// `note` is a human-readable extra (witness summaries, fit summaries) that
/// is never serialized.
struct ExperimentRecord {
    std::string command;
    std::size_t n = 0;
    int k = 0;
    int colors = 0;
    int trial = 0;
    bool connected = false;
    std::size_t edges = 0;
    double success_fraction = 0.0;
    std::optional<int> k_min;
    std::uint64_t seed = 0;
    std::string note;

    bool operator==(const ExperimentRecord& other) const;
};

using RecordSink = std::function<void(const ExperimentRecord&)>;

/// Throws UsageError if the experiment spec is not runnable.
void validate_spec(const ExperimentSpec& spec);

/// Executes the experiment, delivering records ordered by (n, k, trial).
/// Deterministic: identical specs (seed included) produce identical records.
void run(const ExperimentSpec& spec, const RecordSink& sink);
std::vector<ExperimentRecord> run(const ExperimentSpec& spec);

/// Serialized record stream. CSV columns are exactly
///   command,n,k,colors,trial,connected,edges,success_fraction,k_min,seed
/// (header always present, LF endings, k_min empty when none). JSON is an
/// array of objects with the same keys, k_min null when none.
std::string emit(const std::vector<ExperimentRecord>& records, OutputFormat format);

std::string csv_header();
std::string csv_row(const ExperimentRecord& record);

/// Parses emit() output back into records (either format, auto-detected).
std::vector<ExperimentRecord> parse_records(const std::string& text);

}  // namespace sinrsim
