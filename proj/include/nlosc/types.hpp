#pragma once

#include <map>
#include <string>
#include <vector>

namespace nlosc {

enum class Model {
    scarf,               // trigonometric Scarf well, classical solutions
    scarf_extended,      // Scarf well plus rational correction term
    oscillator,          // nonlinear oscillator, conventional solutions
    oscillator_extended, // nonlinear oscillator, rationally extended solutions
};

inline const char* model_name(Model m) {
    switch (m) {
        case Model::scarf: return "scarf";
        case Model::scarf_extended: return "scarf_extended";
        case Model::oscillator: return "oscillator";
        case Model::oscillator_extended: return "oscillator_extended";
    }
    return "unknown";
}

struct SpectralLine {
    Model model;
    long long n = 0; // principal quantum number
    double energy = 0.0;
};

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail; // offending value or short explanation
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool valid = false; // conjunction of all checks
};

enum class ReportKind {
    gram,
    residual,
    eigencompare,
    normcheck,
};

inline const char* report_kind_name(ReportKind k) {
    switch (k) {
        case ReportKind::gram: return "gram";
        case ReportKind::residual: return "residual";
        case ReportKind::eigencompare: return "eigencompare";
        case ReportKind::normcheck: return "normcheck";
    }
    return "unknown";
}

// Uniform result envelope for the numerical verification routines.
// `values` holds a matrix (gram) or a list of rows (everything else);
// `metadata` echoes parameters and scalar summaries by name.
struct VerificationReport {
    ReportKind kind = ReportKind::gram;
    std::vector<std::vector<double>> values;
    double tolerance = 0.0;
    bool pass = false;
    std::map<std::string, double> metadata;
    std::vector<std::string> columns; // labels for value rows where applicable
};

} // namespace nlosc
