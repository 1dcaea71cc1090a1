#ifndef DRG_TOOLS_REPORT_HH
#define DRG_TOOLS_REPORT_HH

#include <drg/lattice.hh>

#include <json.hpp>

#include <ostream>
#include <span>
#include <string>

namespace drg::cli
{
    inline constexpr int schema_version = 1;

    /// x rounded to the given number of significant decimal digits.
    auto round_significant(double x, int digits = 12) -> double;

    auto verdict_json(const Verdict & verdict) -> nlohmann::json;

    /// Structured report; keys are stable and every double carries 12 significant digits.
    auto report_json(const LatticeReport & report) -> nlohmann::json;

    auto write_text(std::ostream & out, const LatticeReport & report) -> void;

    /// Hasse diagram, bottom to top. Probe nodes appear when the report has a probe.
    auto write_dot(std::ostream & out, const LatticeReport & report, const std::string & graph_id = "lattice") -> void;

    /// One line per verdict: PASS or FAIL, tag, name, residual against threshold.
    auto write_verdict_lines(std::ostream & out, std::span<const Verdict> verdicts) -> void;
}

#endif
