#pragma once

#include <string>
#include <vector>

#include "wittrep/tensor.hpp"

namespace wittrep {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    double millis = 0.0;
};

struct SeriesLine {
    std::string module_name;
    CompositionReport report;
};

struct VerificationReport {
    std::uint64_t prime = 0;
    std::vector<CheckResult> checks;
    std::vector<WeightTable> tables;
    std::vector<SeriesLine> series;
    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
};

/// Full verification for one prime: structure axioms, constructor
/// self-checks, the injectivity/surjectivity suites, the weight table, the
/// chains, the main theorem and the Grothendieck identities.
VerificationReport run_verify(std::uint64_t p);

/// Axiom/invariant suites only (no tensor pipeline).
VerificationReport run_selftest(std::uint64_t p);

/// Composition series for a named module. Selectors:
/// A1, A2, AsPlus, AaPlus, LxL, adjoint, Z:<lambda>, L:<lambda>.
SeriesLine run_series(std::uint64_t p, const std::string& selector);

/// "d0 > d1 > ... > 0; factors L^-(..),..." display form.
std::string format_series(const SeriesLine& line, std::uint64_t p);

std::string render_text(const VerificationReport& r);
std::string render_markdown(const VerificationReport& r);
std::string render_json(const VerificationReport& r);

} // namespace wittrep
