#ifndef FPCL_INTERACTION_HPP
#define FPCL_INTERACTION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpcl/algebra.hpp"

namespace fpcl {

// A K-fuzzy interaction: a total weight map over a declared port set, with at
// least one nonzero weight. Ports are kept sorted; weights are aligned with
// them. Every declared port must be assigned explicitly (0 is allowed).
class Interaction {
public:
    static Interaction make(std::vector<std::pair<std::string, Value>> weights);

    const std::vector<std::string>& ports() const { return ports_; }
    const std::vector<Value>& weights() const { return weights_; }
    AlgebraKind algebra() const { return weights_.front().kind(); }

    // Weight of a port; DomainError naming the port when it is not declared.
    const Value& at(const std::string& port) const;

    friend bool operator==(const Interaction& a, const Interaction& b) {
        return a.ports_ == b.ports_ && a.weights_ == b.weights_;
    }
    friend bool operator!=(const Interaction& a, const Interaction& b) {
        return !(a == b);
    }
    // Canonical order: weight vectors compared positionally.
    friend bool operator<(const Interaction& a, const Interaction& b);

private:
    std::vector<std::string> ports_;
    std::vector<Value> weights_;
};

// A nonempty, duplicate-free set of interactions over one port set and one
// algebra, kept in canonical order.
class Configuration {
public:
    static Configuration make(std::vector<Interaction> members);

    const std::vector<Interaction>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<std::string>& ports() const { return members_.front().ports(); }
    AlgebraKind algebra() const { return members_.front().algebra(); }

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.members_ == b.members_;
    }

private:
    std::vector<Interaction> members_;
};

// All interactions over `ports` (every weight map except all-zero) in
// canonical order: weight vectors counted with the last port least
// significant, carrier elements in canonical element order.
std::vector<Interaction> enumerate_interactions(const std::vector<std::string>& ports,
                                                 AlgebraKind kind);
std::vector<Interaction> enumerate_interactions(const std::vector<std::string>& ports,
                                                 const std::vector<Value>& carrier);

// Streams every nonempty subset of `interactions` with size <= max_size (all
// sizes when absent), ordered by size then lexicographically by member
// indices. Stops early when the callback returns false.
void for_each_configuration(const std::vector<Interaction>& interactions,
                            std::optional<std::size_t> max_size,
                            const std::function<bool(const Configuration&)>& fn);

std::vector<Configuration> enumerate_configurations(
    const std::vector<std::string>& ports, AlgebraKind kind,
    std::optional<std::size_t> max_size = std::nullopt);

// Configuration JSON:
//   {"algebra":"fuzzy","ports":["p","q"],
//    "interactions":[{"p":"0.3","q":"1"},{"p":"1","q":"0"}]}
// Weights are strings: decimal or "a/b" for fuzzy, "0"/"1"/"u"/"w" for the
// finite algebras. Rejected: empty interaction list, all-zero interactions,
// unknown or missing port keys, values outside the algebra. Duplicate
// interactions are merged (configurations are sets).
Configuration parse_configuration_json(const std::string& text);
std::string configuration_json(const Configuration& config);

}  // namespace fpcl

#endif
