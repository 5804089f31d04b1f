#include "bihomega/report.hpp"

#include <algorithm>
#include <sstream>

namespace bihomega {

bool Verdict::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
}

const CheckReport* Verdict::find(const std::string& axiom) const {
  for (const auto& r : reports) {
    if (r.axiom == axiom) return &r;
  }
  return nullptr;
}

std::size_t Verdict::violations() const {
  std::size_t total = 0;
  for (const auto& r : reports) total += r.violations;
  return total;
}

void Verdict::absorb(const Verdict& other, const std::string& prefix) {
  for (CheckReport r : other.reports) {
    if (!prefix.empty()) r.axiom = prefix + "/" + r.axiom;
    reports.push_back(std::move(r));
  }
}

std::string describe_failures(const Verdict& verdict) {
  std::ostringstream out;
  for (const auto& r : verdict.reports) {
    if (r.passed()) continue;
    out << r.axiom << ": " << r.violations << " violation(s)";
    if (!r.witnesses.empty()) {
      const Witness& w = r.witnesses.front();
      out << ", first at omega (";
      for (std::size_t i = 0; i < w.omega.size(); ++i) out << (i ? "," : "") << w.omega[i];
      out << ") basis (";
      for (std::size_t i = 0; i < w.basis.size(); ++i) out << (i ? "," : "") << "e" << w.basis[i] + 1;
      out << "): " << format_vector(w.lhs) << " != " << format_vector(w.rhs);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace bihomega
