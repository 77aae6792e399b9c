#pragma once

#include "sympspin/analysis.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sympspin {

inline constexpr const char* kConventionNote = "all spinors implicitly carry e^{-|q|^2/2}";

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s);
std::string format_extension(Format f);

/// Closed set of suite names, in canonical order.
const std::vector<std::string>& all_suites();
/// "all" or a comma-separated list; returns the names in canonical order
/// without duplicates. Throws Error on an unknown name.
std::vector<std::string> parse_suites(const std::string& text);

struct JobConfig {
    int n = 2;
    int hMax = 3;
    int Q = 4;
    Parity parity = Parity::Both;
    std::vector<std::string> suites = all_suites();
    std::string outputPath;
    Format format = Format::Json;
    /// Worker cap; 0 means SYMPSPIN_THREADS or the hardware concurrency.
    unsigned threads = 0;

    /// Throws Error when a field is out of range.
    void validate() const;
};

/// Worker count from SYMPSPIN_THREADS, else the hardware concurrency.
unsigned default_threads();

/// Runs every selected suite for h = 0..hMax (the example suite once) and
/// returns the reports sorted by claim and parameters.
std::vector<VerificationReport> run_suites(const JobConfig& cfg);

using Json = nlohmann::ordered_json;

Json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);
Json sector_to_json(const SectorSpec& s);

/// Whole verification document. Output is a pure function of the inputs.
Json verification_document(const JobConfig& cfg, const std::vector<VerificationReport>& reports);
std::string render_reports(const JobConfig& cfg, const std::vector<VerificationReport>& reports, Format f);

/// Ambient spec, ordered monomials and sparse coefficient vectors.
Json subspace_to_json(const SubspaceBasis& b);

/// Dimension tables aggregated from verification documents: the triangle
/// of dim X_s^j M_l (rows l, columns j) and dim Ker T_s per homogeneity.
struct DimensionTables {
    struct Cell {
        int n, l, j, Q;
        std::string parity;
        std::int64_t dim;
    };
    struct KernelRow {
        int n, h, Q;
        std::string parity;
        std::int64_t dim;
    };
    std::vector<Cell> triangle;
    std::vector<KernelRow> twistorKernel;
};

DimensionTables aggregate(const std::vector<Json>& documents);
std::string render_tables(const DimensionTables& t, Format f);

}  // namespace sympspin
