#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "abspec/checks.hpp"
#include "abspec/spectrum.hpp"

namespace abspec::io {

// All floating output is printed with 15 significant digits so that repeated
// runs produce byte-identical files.
std::string fmt15(double x);
std::string json_escape(const std::string& s);

void write_spectrum_csv(std::ostream& os, const std::vector<EigenvalueRecord>& recs);
void write_spectrum_json(std::ostream& os, const std::vector<EigenvalueRecord>& recs,
                         const std::string& config_json,
                         const std::vector<std::string>& diagnostics);

void write_sweep_csv(std::ostream& os, const SweepTable& table);
void write_sweep_json(std::ostream& os, const SweepTable& table,
                      const std::string& config_json);
void write_sweep_svg(std::ostream& os, const SweepTable& table,
                     const std::string& title, double lambda_lo, double lambda_hi);

void write_checks_text(std::ostream& os, const std::vector<CheckResult>& results);
void write_checks_json(std::ostream& os, const std::vector<CheckResult>& results,
                       const std::string& config_json);

}  // namespace abspec::io
