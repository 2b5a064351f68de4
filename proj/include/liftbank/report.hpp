// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#ifndef LIFTBANK_REPORT_HPP
#define LIFTBANK_REPORT_HPP

#include "liftbank/normalization.hpp"

#include <string>

namespace liftbank {

enum class ReportFormat { Text, Json };

std::string render_analysis(const AnalysisReport& report, ReportFormat format);
std::string render_compliance(const ComplianceReport& report, ReportFormat format);

} // namespace liftbank

#endif
