#include "svcplan/registry.hpp"

#include <algorithm>
#include <unordered_set>

#include "svcplan/errors.hpp"

namespace svcplan {

namespace {

void check_concepts(const std::string& service_id, const char* side,
                    const std::vector<std::string>& concepts,
                    const ConceptHierarchy& hierarchy,
                    std::vector<std::string>& findings) {
  if (concepts.empty()) {
    findings.push_back("service '" + service_id + "': " + side + "s must be non-empty");
    return;
  }
  std::unordered_set<std::string> seen;
  for (const auto& concept_id : concepts) {
    if (!seen.insert(concept_id).second) {
      findings.push_back("service '" + service_id + "': duplicate " + side +
                         " concept '" + concept_id + "'");
    }
    if (!hierarchy.contains(concept_id)) {
      findings.push_back("service '" + service_id + "': unknown " + side +
                         " concept '" + concept_id + "'");
    }
  }
}

void throw_first(const std::vector<std::string>& findings) {
  if (!findings.empty()) {
    throw ValidationError(findings.front());
  }
}

}  // namespace

std::vector<std::string> validate_service(const ServiceDescription& service,
                                          const ConceptHierarchy& hierarchy) {
  std::vector<std::string> findings;
  if (service.id.empty()) {
    findings.push_back("service with empty id");
    return findings;
  }
  check_concepts(service.id, "input", service.inputs, hierarchy, findings);
  check_concepts(service.id, "output", service.outputs, hierarchy, findings);
  if (service.qos.cost < 0.0) {
    findings.push_back("service '" + service.id + "': cost must be non-negative");
  }
  if (service.qos.execution_time < 0.0) {
    findings.push_back("service '" + service.id + "': execution time must be non-negative");
  }
  if (service.qos.availability < 0.0 || service.qos.availability > 1.0) {
    findings.push_back("service '" + service.id + "': availability must lie in [0,1]");
  }
  return findings;
}

Registry Registry::from_services(std::vector<ServiceDescription> services,
                                 const ConceptHierarchy& hierarchy) {
  return restore(std::move(services), hierarchy, 1);
}

Registry Registry::restore(std::vector<ServiceDescription> services,
                           const ConceptHierarchy& hierarchy,
                           std::uint64_t revision) {
  std::unordered_set<std::string> ids;
  for (const auto& service : services) {
    throw_first(validate_service(service, hierarchy));
    if (!ids.insert(service.id).second) {
      throw ValidationError("duplicate service id '" + service.id + "'");
    }
  }
  return Registry(std::move(services), revision);
}

const ServiceDescription* Registry::find(const std::string& id) const {
  auto it = std::find_if(services_.begin(), services_.end(),
                         [&](const ServiceDescription& s) { return s.id == id; });
  return it == services_.end() ? nullptr : &*it;
}

Registry Registry::publish(ServiceDescription service,
                           const ConceptHierarchy& hierarchy) const {
  throw_first(validate_service(service, hierarchy));
  if (find(service.id) != nullptr) {
    throw ValidationError("service id '" + service.id + "' already published");
  }
  std::vector<ServiceDescription> next = services_;
  next.push_back(std::move(service));
  return Registry(std::move(next), revision_ + 1);
}

Registry Registry::update(ServiceDescription service,
                          const ConceptHierarchy& hierarchy) const {
  throw_first(validate_service(service, hierarchy));
  std::vector<ServiceDescription> next = services_;
  auto it = std::find_if(next.begin(), next.end(),
                         [&](const ServiceDescription& s) { return s.id == service.id; });
  if (it == next.end()) {
    throw ValidationError("unknown service id '" + service.id + "'");
  }
  *it = std::move(service);
  return Registry(std::move(next), revision_ + 1);
}

Registry Registry::remove(const std::string& id) const {
  std::vector<ServiceDescription> next = services_;
  auto it = std::find_if(next.begin(), next.end(),
                         [&](const ServiceDescription& s) { return s.id == id; });
  if (it == next.end()) {
    throw ValidationError("unknown service id '" + id + "'");
  }
  next.erase(it);
  return Registry(std::move(next), revision_ + 1);
}

}  // namespace svcplan
