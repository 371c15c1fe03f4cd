#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// In-memory representation of a problem-frames model: problem diagrams
// (machine, problem domains, requirements, interfaces), the hardware
// facilities attached to domains, pairwise correlation judgments, merge
// hints, and an optional declared similarity table.
//
// All types are plain immutable-by-convention values; nothing here mutates
// shared state, so models can be shared freely across threads once built.

namespace pfms {

using FacilityId = std::string;
using DiagramId = std::string;
using DomainId = std::string;

enum class DomainKind { machine, biddable, causal, lexical };

const char* to_string(DomainKind kind);

// Unordered pair of diagram ids. Normalized on construction so that
// (a,b) and (b,a) compare and hash identically; `first` is the
// lexicographically smaller id. Display order is a presentation concern
// and is resolved against the model's diagram order where needed.
struct DiagramPair {
    DiagramId first;
    DiagramId second;

    DiagramPair() = default;
    DiagramPair(DiagramId a, DiagramId b);

    bool self() const { return first == second; }
    bool contains(const DiagramId& id) const { return first == id || second == id; }
    DiagramId other(const DiagramId& id) const { return first == id ? second : first; }

    auto operator<=>(const DiagramPair&) const = default;
};

struct DomainNode {
    DomainId id;
    std::string name;  // display text; machines use their id as name in the text format
    DomainKind kind = DomainKind::causal;
    std::set<FacilityId> facilities;

    bool operator==(const DomainNode&) const = default;
};

struct Requirement {
    std::string id;
    std::string text;
    std::set<DomainId> constrains;  // domains the requirement imposes behavior on
    std::set<DomainId> refers;      // domains it merely mentions

    bool operator==(const Requirement&) const = default;
};

// Shared-phenomena connection between two domains of one diagram.
// Endpoints are an unordered pair; equality ignores endpoint order but
// keeps the phenomena list ordered (it is presentation text).
struct Interface {
    DomainId a;
    DomainId b;
    std::vector<std::string> phenomena;

    bool operator==(const Interface& rhs) const;
};

struct ProblemDiagram {
    DiagramId id;
    std::string title;
    DomainNode machine;
    std::vector<DomainNode> domains;  // problem domains, declaration order preserved
    std::vector<Requirement> requirements;
    std::vector<Interface> interfaces;

    bool operator==(const ProblemDiagram&) const = default;
};

enum class CorrelationLevel { none, low, high };

const char* to_string(CorrelationLevel level);

// Symmetric sparse matrix of analyst correlation judgments. Only low and
// high entries are stored; absent pairs read as none. Storing none erases
// the entry, so equal matrices always compare equal structurally.
class CorrelationMatrix {
public:
    CorrelationLevel level(const DiagramId& a, const DiagramId& b) const;
    CorrelationLevel level(const DiagramPair& pair) const;
    void set(const DiagramPair& pair, CorrelationLevel level);
    bool has(const DiagramPair& pair) const { return entries_.count(pair) != 0; }

    const std::map<DiagramPair, CorrelationLevel>& entries() const { return entries_; }

    bool operator==(const CorrelationMatrix&) const = default;

private:
    std::map<DiagramPair, CorrelationLevel> entries_;
};

// Explicit analyst decision to co-locate (or not) a low-correlation pair.
struct MergeHint {
    DiagramPair pair;
    bool accepted = false;
    std::string note;  // optional free text, empty when absent

    bool operator==(const MergeHint&) const = default;
};

// Declared shared-facility counts. When present on a model it replaces the
// counts computed from domain facility sets; it must cover every diagram
// pair and satisfy global <= min(pairwise).
struct SimilarityOverride {
    std::map<DiagramPair, int> pairwise;
    int global = 0;

    bool operator==(const SimilarityOverride&) const = default;
};

struct Model {
    std::string name;
    // Facility id -> display name (may be empty). Keys are the facility set.
    std::map<FacilityId, std::string> facilities;
    std::vector<ProblemDiagram> diagrams;
    CorrelationMatrix correlations;
    std::vector<MergeHint> hints;
    std::optional<SimilarityOverride> similarity_override;

    const ProblemDiagram* find_diagram(const DiagramId& id) const;
    bool has_facility(const FacilityId& id) const { return facilities.count(id) != 0; }

    bool operator==(const Model&) const = default;
};

enum class Severity { error, warning };

const char* to_string(Severity severity);

// One structural finding from validate(). `subject` is the offending
// identifier; `anchor` is a stable key ("diagram:P1", "hint:P8|P9", ...)
// the parser uses to map findings back to source spans.
struct Diagnostic {
    Severity severity = Severity::error;
    std::string message;
    std::string subject;
    std::string anchor;

    bool operator==(const Diagnostic&) const = default;
};

// Checks every structural invariant of the model and returns the
// violations, deterministically ordered (model-scope findings first, then
// per-diagram findings sorted by diagram id, then subject id). An empty
// result means the model is structurally sound. Pure: never throws, never
// mutates.
std::vector<Diagnostic> validate(const Model& model);

// Union of the facility sets of every domain of the diagram, machine
// included.
std::set<FacilityId> facility_set(const ProblemDiagram& diagram);

// Error for operations whose preconditions are violated (unknown ids,
// self pairs, invalid overrides, irreconcilable merges).
class ModelError : public std::runtime_error {
public:
    enum class Kind { reference, precondition, validation, merge_conflict };

    ModelError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace pfms
