#include "fpcl/interaction.hpp"

#include <algorithm>

#include "fpcl/formula.hpp"
#include "json.hpp"

namespace fpcl {

Interaction Interaction::make(std::vector<std::pair<std::string, Value>> weights) {
    if (weights.empty()) throw DomainError("interaction with no ports");
    std::sort(weights.begin(), weights.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    Interaction result;
    const AlgebraKind kind = weights.front().second.kind();
    bool nonzero = false;
    for (auto& [port, value] : weights) {
        validate_port_name(port);
        if (!result.ports_.empty() && result.ports_.back() == port)
            throw DomainError("duplicate port '" + port + "' in interaction");
        if (value.kind() != kind)
            throw DomainError("mixed algebras in interaction weights");
        nonzero = nonzero || !value.is_zero();
        result.ports_.push_back(std::move(port));
        result.weights_.push_back(std::move(value));
    }
    if (!nonzero)
        throw DomainError("interaction must assign a nonzero weight to at least one port");
    return result;
}

const Value& Interaction::at(const std::string& port) const {
    const auto it = std::lower_bound(ports_.begin(), ports_.end(), port);
    if (it == ports_.end() || *it != port)
        throw DomainError("unknown port '" + port + "'");
    return weights_[static_cast<std::size_t>(it - ports_.begin())];
}

bool operator<(const Interaction& a, const Interaction& b) {
    if (a.ports_ != b.ports_)
        throw DomainError("interactions over different port sets are not comparable");
    for (std::size_t i = 0; i < a.weights_.size(); ++i) {
        if (a.weights_[i] == b.weights_[i]) continue;
        return Value::canonical_less(a.weights_[i], b.weights_[i]);
    }
    return false;
}

Configuration Configuration::make(std::vector<Interaction> members) {
    if (members.empty()) throw DomainError("configuration must be nonempty");
    const auto& ports = members.front().ports();
    const AlgebraKind kind = members.front().algebra();
    for (const auto& m : members) {
        if (m.ports() != ports)
            throw DomainError("configuration members must share one port set");
        if (m.algebra() != kind)
            throw DomainError("configuration members must share one algebra");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Configuration result;
    result.members_ = std::move(members);
    return result;
}

std::vector<Interaction> enumerate_interactions(const std::vector<std::string>& ports,
                                                 AlgebraKind kind) {
    if (kind == AlgebraKind::FuzzyRational)
        throw DomainError("fuzzy interactions need a sample grid carrier");
    return enumerate_interactions(ports, elements(kind));
}

std::vector<Interaction> enumerate_interactions(const std::vector<std::string>& ports,
                                                 const std::vector<Value>& carrier) {
    if (ports.empty()) throw DomainError("enumerate_interactions: no ports");
    if (carrier.empty()) throw DomainError("enumerate_interactions: empty carrier");
    for (const auto& p : ports) validate_port_name(p);

    std::vector<std::string> sorted = ports;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("enumerate_interactions: duplicate port");

    const std::size_t n = sorted.size();
    const std::size_t k = carrier.size();
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(k);
    if (total > 1U << 20)
        throw ResourceError("interaction space too large: " + std::to_string(k) + "^" +
                            std::to_string(n));

    std::vector<Interaction> result;
    std::vector<std::size_t> digits(n, 0);
    for (;;) {
        // Advance the counter (last port least significant).
        std::size_t idx = n;
        while (idx > 0) {
            --idx;
            if (++digits[idx] < k) break;
            digits[idx] = 0;
            if (idx == 0) return result;
        }
        std::vector<std::pair<std::string, Value>> weights;
        weights.reserve(n);
        for (std::size_t i = 0; i < n; ++i) weights.emplace_back(sorted[i], carrier[digits[i]]);
        result.push_back(Interaction::make(std::move(weights)));
    }
}

void for_each_configuration(const std::vector<Interaction>& interactions,
                            std::optional<std::size_t> max_size,
                            const std::function<bool(const Configuration&)>& fn) {
    const std::size_t n = interactions.size();
    const std::size_t limit = std::min(max_size.value_or(n), n);
    std::vector<std::size_t> pick;
    for (std::size_t size = 1; size <= limit; ++size) {
        pick.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        for (;;) {
            std::vector<Interaction> members;
            members.reserve(size);
            for (std::size_t i : pick) members.push_back(interactions[i]);
            if (!fn(Configuration::make(std::move(members)))) return;
            // Next combination in lexicographic order.
            std::size_t i = size;
            while (i > 0) {
                --i;
                if (pick[i] + (size - i) < n) break;
                if (i == 0) {
                    i = size;
                    break;
                }
            }
            if (i == size) break;
            ++pick[i];
            for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
}

std::vector<Configuration> enumerate_configurations(
    const std::vector<std::string>& ports, AlgebraKind kind,
    std::optional<std::size_t> max_size) {
    const auto interactions = enumerate_interactions(ports, kind);
    if (!max_size && interactions.size() > 16)
        throw ResourceError("configuration space too large: 2^" +
                            std::to_string(interactions.size()));
    std::vector<Configuration> result;
    for_each_configuration(interactions, max_size, [&](const Configuration& c) {
        result.push_back(c);
        return true;
    });
    return result;
}

Configuration parse_configuration_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1);
    }
    if (!doc.is_object()) throw DomainError("configuration JSON must be an object");

    const auto algebra_it = doc.find("algebra");
    if (algebra_it == doc.end() || !algebra_it->is_string())
        throw DomainError("configuration JSON needs an \"algebra\" string");
    const auto kind = algebra_from_name(algebra_it->get<std::string>());
    if (!kind)
        throw DomainError("unknown algebra '" + algebra_it->get<std::string>() + "'");

    const auto ports_it = doc.find("ports");
    if (ports_it == doc.end() || !ports_it->is_array() || ports_it->empty())
        throw DomainError("configuration JSON needs a nonempty \"ports\" array");
    std::vector<std::string> ports;
    for (const auto& p : *ports_it) {
        if (!p.is_string()) throw DomainError("ports must be strings");
        ports.push_back(p.get<std::string>());
        validate_port_name(ports.back());
    }
    std::vector<std::string> sorted = ports;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("duplicate port in \"ports\"");

    const auto inter_it = doc.find("interactions");
    if (inter_it == doc.end() || !inter_it->is_array() || inter_it->empty())
        throw DomainError("configuration JSON needs a nonempty \"interactions\" array");

    std::vector<Interaction> members;
    for (const auto& entry : *inter_it) {
        if (!entry.is_object()) throw DomainError("each interaction must be an object");
        std::vector<std::pair<std::string, Value>> weights;
        for (const auto& [key, value] : entry.items()) {
            if (std::find(ports.begin(), ports.end(), key) == ports.end())
                throw DomainError("unknown port key '" + key + "' in interaction");
            if (!value.is_string())
                throw DomainError("weight of port '" + key + "' must be a string");
            weights.emplace_back(key, Value::parse(*kind, value.get<std::string>()));
        }
        for (const auto& p : ports) {
            const bool present =
                std::any_of(weights.begin(), weights.end(),
                            [&](const auto& w) { return w.first == p; });
            if (!present)
                throw DomainError("interaction missing an assignment for port '" + p + "'");
        }
        members.push_back(Interaction::make(std::move(weights)));
    }
    return Configuration::make(std::move(members));
}

std::string configuration_json(const Configuration& config) {
    nlohmann::json doc;
    doc["algebra"] = algebra_name(config.algebra());
    doc["ports"] = config.ports();
    nlohmann::json list = nlohmann::json::array();
    for (const auto& member : config.members()) {
        nlohmann::json entry = nlohmann::json::object();
        for (std::size_t i = 0; i < member.ports().size(); ++i)
            entry[member.ports()[i]] = member.weights()[i].str();
        list.push_back(std::move(entry));
    }
    doc["interactions"] = std::move(list);
    return doc.dump();
}

}  // namespace fpcl
