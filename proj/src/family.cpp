#include "crosscap/family.hpp"

#include <array>
#include <set>
#include <stdexcept>
#include <utility>

namespace crosscap {

namespace {

constexpr std::array<std::pair<Role, const char*>, 6> kRoleNames{{
    {Role::Base, "base"},
    {Role::Shift, "shift"},
    {Role::Gamma, "gamma"},
    {Role::GammaCore, "gamma_core"},
    {Role::Tilde, "tilde"},
    {Role::Meridian, "meridian"},
}};

}  // namespace

std::string to_string(Role r) {
  for (const auto& [role, name] : kRoleNames) {
    if (role == r) {
      return name;
    }
  }
  return "?";
}

Role parse_role(const std::string& text) {
  for (const auto& [role, name] : kRoleNames) {
    if (text == name) {
      return role;
    }
  }
  throw std::invalid_argument("unknown role '" + text + "'");
}

const Curve* CurveFamily::find(const std::string& id) const {
  for (const auto& c : curves) {
    if (c.id == id) {
      return &c;
    }
  }
  return nullptr;
}

ValidityReport validate_family(const CurveFamily& fam) {
  ValidityReport report = validate_schema(fam.schema, true);
  if (!fam.tags.empty() && fam.tags.size() != fam.curves.size()) {
    report.violations.push_back("tag list does not match the curve list");
  }
  std::set<std::string> ids;
  std::vector<const Curve*> ptrs;
  for (const auto& c : fam.curves) {
    if (!ids.insert(c.id).second) {
      report.violations.push_back("duplicate curve id '" + c.id + "'");
    }
    for (const auto& v : validate_curve(fam.schema, c).violations) {
      report.violations.push_back(c.id + ": " + v);
    }
    ptrs.push_back(&c);
  }
  if (report.ok()) {
    try {
      require_jointly_generic(ptrs);
    } catch (const InvalidInput& e) {
      report.violations.push_back(e.what());
    }
  }
  return report;
}

}  // namespace crosscap
