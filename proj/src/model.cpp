#include "pfms/model.hpp"

#include <algorithm>
#include <sstream>

namespace pfms {

const char* to_string(DomainKind kind) {
    switch (kind) {
        case DomainKind::machine: return "machine";
        case DomainKind::biddable: return "biddable";
        case DomainKind::causal: return "causal";
        case DomainKind::lexical: return "lexical";
    }
    return "?";
}

const char* to_string(CorrelationLevel level) {
    switch (level) {
        case CorrelationLevel::none: return "none";
        case CorrelationLevel::low: return "low";
        case CorrelationLevel::high: return "high";
    }
    return "?";
}

const char* to_string(Severity severity) {
    return severity == Severity::error ? "error" : "warning";
}

DiagramPair::DiagramPair(DiagramId a, DiagramId b) {
    if (b < a) std::swap(a, b);
    first = std::move(a);
    second = std::move(b);
}

bool Interface::operator==(const Interface& rhs) const {
    const bool same = (a == rhs.a && b == rhs.b) || (a == rhs.b && b == rhs.a);
    return same && phenomena == rhs.phenomena;
}

CorrelationLevel CorrelationMatrix::level(const DiagramId& a, const DiagramId& b) const {
    return level(DiagramPair(a, b));
}

CorrelationLevel CorrelationMatrix::level(const DiagramPair& pair) const {
    auto it = entries_.find(pair);
    return it == entries_.end() ? CorrelationLevel::none : it->second;
}

void CorrelationMatrix::set(const DiagramPair& pair, CorrelationLevel level) {
    if (level == CorrelationLevel::none) {
        entries_.erase(pair);
    } else {
        entries_[pair] = level;
    }
}

const ProblemDiagram* Model::find_diagram(const DiagramId& id) const {
    for (const auto& diagram : diagrams) {
        if (diagram.id == id) return &diagram;
    }
    return nullptr;
}

std::set<FacilityId> facility_set(const ProblemDiagram& diagram) {
    std::set<FacilityId> result(diagram.machine.facilities);
    for (const auto& domain : diagram.domains) {
        result.insert(domain.facilities.begin(), domain.facilities.end());
    }
    return result;
}

namespace {

std::string pair_anchor(const char* prefix, const DiagramPair& pair) {
    return std::string(prefix) + ":" + pair.first + "|" + pair.second;
}

std::string pair_text(const DiagramPair& pair) {
    return "(" + pair.first + ", " + pair.second + ")";
}

class Validator {
public:
    explicit Validator(const Model& model) : model_(model) {}

    std::vector<Diagnostic> run() {
        check_diagram_ids();
        check_correlations();
        check_hints();
        check_override();
        for (const auto& diagram : model_.diagrams) check_diagram(diagram);
        sort_output();
        return std::move(diagnostics_);
    }

private:
    void error(std::string message, std::string subject, std::string anchor,
               std::string diagram_scope = "") {
        diagnostics_.push_back(
            {Severity::error, std::move(message), std::move(subject), std::move(anchor)});
        scopes_.push_back(std::move(diagram_scope));
    }

    void check_diagram_ids() {
        std::set<DiagramId> seen;
        for (const auto& diagram : model_.diagrams) {
            if (!seen.insert(diagram.id).second) {
                error("duplicate diagram id '" + diagram.id + "'", diagram.id,
                      "diagram:" + diagram.id);
            }
        }
    }

    bool diagram_exists(const DiagramId& id) const {
        return model_.find_diagram(id) != nullptr;
    }

    void check_pair_refs(const DiagramPair& pair, const char* what, const std::string& anchor) {
        for (const DiagramId* id : {&pair.first, &pair.second}) {
            if (!diagram_exists(*id)) {
                error(std::string(what) + " references unknown diagram '" + *id + "'", *id,
                      anchor);
            }
        }
    }

    void check_correlations() {
        for (const auto& [pair, level] : model_.correlations.entries()) {
            const std::string anchor = pair_anchor("correlation", pair);
            if (pair.self()) {
                error("correlation pair " + pair_text(pair) + " relates a diagram to itself",
                      pair.first, anchor);
                continue;
            }
            check_pair_refs(pair, "correlation", anchor);
            (void)level;
        }
    }

    void check_hints() {
        std::set<DiagramPair> seen;
        for (const auto& hint : model_.hints) {
            const std::string anchor = pair_anchor("hint", hint.pair);
            if (hint.pair.self()) {
                error("merge hint " + pair_text(hint.pair) + " relates a diagram to itself",
                      hint.pair.first, anchor);
                continue;
            }
            if (!seen.insert(hint.pair).second) {
                error("duplicate merge hint for pair " + pair_text(hint.pair), hint.pair.first,
                      anchor);
                continue;
            }
            check_pair_refs(hint.pair, "merge hint", anchor);
            if (!diagram_exists(hint.pair.first) || !diagram_exists(hint.pair.second)) continue;
            switch (model_.correlations.level(hint.pair)) {
                case CorrelationLevel::low:
                    break;
                case CorrelationLevel::high:
                    error("merge hint on pair " + pair_text(hint.pair) +
                              " with high correlation; the merge is already mandatory",
                          hint.pair.first, anchor);
                    break;
                case CorrelationLevel::none:
                    error("merge hint on pair " + pair_text(hint.pair) +
                              " with no recorded correlation; hints apply to low-correlation "
                              "pairs",
                          hint.pair.first, anchor);
                    break;
            }
        }
    }

    void check_override() {
        if (!model_.similarity_override) return;
        const auto& override_ = *model_.similarity_override;

        std::set<DiagramPair> expected;
        std::set<DiagramId> ids;
        for (const auto& diagram : model_.diagrams) ids.insert(diagram.id);
        for (auto it = ids.begin(); it != ids.end(); ++it) {
            for (auto jt = std::next(it); jt != ids.end(); ++jt) {
                expected.insert(DiagramPair(*it, *jt));
            }
        }

        int min_pairwise = -1;
        for (const auto& [pair, count] : override_.pairwise) {
            const std::string anchor = pair_anchor("override", pair);
            if (pair.self()) {
                error("similarity override pair " + pair_text(pair) +
                          " relates a diagram to itself",
                      pair.first, anchor);
                continue;
            }
            check_pair_refs(pair, "similarity override", anchor);
            if (count < 0) {
                error("similarity override for " + pair_text(pair) + " is negative", pair.first,
                      anchor);
            }
            expected.erase(pair);
            if (min_pairwise < 0 || count < min_pairwise) min_pairwise = count;
        }
        for (const auto& missing : expected) {
            error("similarity override is missing pair " + pair_text(missing), missing.first,
                  "override");
        }
        if (override_.global < 0) {
            error("similarity override global count is negative", "", "override:global");
        }
        if (min_pairwise >= 0 && override_.global > min_pairwise) {
            std::ostringstream msg;
            msg << "similarity override global count " << override_.global
                << " exceeds the smallest pairwise count " << min_pairwise;
            error(msg.str(), "", "override:global");
        }
    }

    void check_diagram(const ProblemDiagram& diagram) {
        const std::string scope = diagram.id;

        if (diagram.machine.id.empty()) {
            error("diagram '" + diagram.id + "' has no machine domain", diagram.id,
                  "diagram:" + diagram.id, scope);
        } else if (diagram.machine.kind != DomainKind::machine) {
            error("machine node '" + diagram.machine.id + "' of diagram '" + diagram.id +
                      "' has kind " + to_string(diagram.machine.kind),
                  diagram.machine.id, "machine:" + diagram.id, scope);
        }

        std::set<DomainId> domain_ids;
        if (!diagram.machine.id.empty()) domain_ids.insert(diagram.machine.id);
        for (const auto& domain : diagram.domains) {
            const std::string anchor = "domain:" + diagram.id + "." + domain.id;
            if (!domain_ids.insert(domain.id).second) {
                error("duplicate domain id '" + domain.id + "' in diagram '" + diagram.id + "'",
                      domain.id, anchor, scope);
            }
            if (domain.kind == DomainKind::machine) {
                error("diagram '" + diagram.id + "' declares a second machine-kind domain '" +
                          domain.id + "'",
                      domain.id, anchor, scope);
            }
            check_facilities(diagram, domain, anchor, scope);
        }
        check_facilities(diagram, diagram.machine, "machine:" + diagram.id, scope);

        std::set<std::string> requirement_ids;
        for (const auto& requirement : diagram.requirements) {
            check_requirement(diagram, requirement, domain_ids, requirement_ids, scope);
        }

        int index = 0;
        for (const auto& interface : diagram.interfaces) {
            check_interface(diagram, interface, domain_ids, index++, scope);
        }
    }

    void check_facilities(const ProblemDiagram& diagram, const DomainNode& domain,
                          const std::string& anchor, const std::string& scope) {
        for (const auto& facility : domain.facilities) {
            if (!model_.has_facility(facility)) {
                error("domain '" + domain.id + "' of diagram '" + diagram.id +
                          "' references undeclared facility '" + facility + "'",
                      domain.id, anchor, scope);
            }
        }
    }

    void check_requirement(const ProblemDiagram& diagram, const Requirement& requirement,
                           const std::set<DomainId>& domain_ids,
                           std::set<std::string>& requirement_ids, const std::string& scope) {
        const std::string anchor = "requirement:" + diagram.id + "." + requirement.id;
        if (!requirement_ids.insert(requirement.id).second) {
            error("duplicate requirement id '" + requirement.id + "' in diagram '" + diagram.id +
                      "'",
                  requirement.id, anchor, scope);
        }
        if (requirement.constrains.empty() && requirement.refers.empty()) {
            error("requirement '" + requirement.id + "' of diagram '" + diagram.id +
                      "' touches no domain",
                  requirement.id, anchor, scope);
        }
        for (const auto& id : requirement.constrains) {
            if (requirement.refers.count(id) != 0) {
                error("requirement '" + requirement.id + "' both constrains and refers to '" +
                          id + "'",
                      requirement.id, anchor, scope);
            }
            if (domain_ids.count(id) == 0) {
                error("requirement '" + requirement.id + "' constrains unknown domain '" + id +
                          "'",
                      requirement.id, anchor, scope);
            } else if (id == diagram.machine.id) {
                error("requirement '" + requirement.id + "' constrains the machine domain '" +
                          id + "'",
                      requirement.id, anchor, scope);
            }
        }
        for (const auto& id : requirement.refers) {
            if (domain_ids.count(id) == 0) {
                error("requirement '" + requirement.id + "' refers to unknown domain '" + id +
                          "'",
                      requirement.id, anchor, scope);
            }
        }
    }

    void check_interface(const ProblemDiagram& diagram, const Interface& interface,
                         const std::set<DomainId>& domain_ids, int index,
                         const std::string& scope) {
        std::ostringstream anchor;
        anchor << "interface:" << diagram.id << "#" << index;
        if (interface.a == interface.b) {
            error("interface of diagram '" + diagram.id + "' connects '" + interface.a +
                      "' to itself",
                  interface.a, anchor.str(), scope);
        }
        for (const DomainId* endpoint : {&interface.a, &interface.b}) {
            if (domain_ids.count(*endpoint) == 0) {
                error("interface of diagram '" + diagram.id + "' references unknown domain '" +
                          *endpoint + "'",
                      *endpoint, anchor.str(), scope);
            }
        }
        if (interface.phenomena.empty()) {
            error("interface " + interface.a + " -- " + interface.b + " of diagram '" +
                      diagram.id + "' lists no phenomena",
                  interface.a, anchor.str(), scope);
        }
    }

    // Model-scope findings first, then per-diagram findings sorted by
    // diagram id then subject. Stable so same-key findings keep check order.
    void sort_output() {
        std::vector<size_t> order(diagnostics_.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](size_t lhs, size_t rhs) {
            const auto key = [&](size_t i) {
                return std::tie(scopes_[i], diagnostics_[i].subject);
            };
            return key(lhs) < key(rhs);
        });
        std::vector<Diagnostic> sorted;
        sorted.reserve(diagnostics_.size());
        for (size_t i : order) sorted.push_back(std::move(diagnostics_[i]));
        diagnostics_ = std::move(sorted);
    }

    const Model& model_;
    std::vector<Diagnostic> diagnostics_;
    std::vector<std::string> scopes_;  // "" for model-scope, diagram id otherwise
};

}  // namespace

std::vector<Diagnostic> validate(const Model& model) {
    return Validator(model).run();
}

}  // namespace pfms
