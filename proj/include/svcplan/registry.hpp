#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "svcplan/ontology.hpp"

namespace svcplan {

struct QosAttributes {
  double cost = 0.0;            // fee units
  double execution_time = 0.0;  // time units
  double availability = 1.0;    // probability in [0,1]

  bool operator==(const QosAttributes&) const = default;
};

struct ServiceDescription {
  std::string id;
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  QosAttributes qos;

  bool operator==(const ServiceDescription&) const = default;
};

// All findings for one service against the hierarchy; empty means valid.
std::vector<std::string> validate_service(const ServiceDescription& service,
                                          const ConceptHierarchy& hierarchy);

// Ordered snapshot of published services. Mutations return a new validated
// snapshot with a bumped revision; existing snapshots are never touched.
class Registry {
public:
  Registry() = default;

  static Registry from_services(std::vector<ServiceDescription> services,
                                const ConceptHierarchy& hierarchy);
  // Restores a snapshot at a known revision (used by the model artifact).
  static Registry restore(std::vector<ServiceDescription> services,
                          const ConceptHierarchy& hierarchy,
                          std::uint64_t revision);

  Registry publish(ServiceDescription service, const ConceptHierarchy& hierarchy) const;
  Registry update(ServiceDescription service, const ConceptHierarchy& hierarchy) const;
  Registry remove(const std::string& id) const;

  const std::vector<ServiceDescription>& services() const { return services_; }
  const ServiceDescription* find(const std::string& id) const;
  std::size_t size() const { return services_.size(); }
  std::uint64_t revision() const { return revision_; }

private:
  Registry(std::vector<ServiceDescription> services, std::uint64_t revision)
      : services_(std::move(services)), revision_(revision) {}

  std::vector<ServiceDescription> services_;
  std::uint64_t revision_ = 0;
};

}  // namespace svcplan
