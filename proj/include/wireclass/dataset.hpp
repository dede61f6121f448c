#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wireclass/capture.hpp"
#include "wireclass/errors.hpp"

// WEKA-style tabular data: an ordered attribute schema plus instances.
// Nominal attributes carry their value dictionary in order of first
// appearance, which later fixes class indices in the confusion matrix.

namespace wireclass {

enum class AttrKind { numeric, nominal, text };

struct Attribute {
    std::string name;
    AttrKind kind = AttrKind::numeric;
    std::vector<std::string> values;  // nominal only; non-empty, duplicate-free

    static Attribute numeric(std::string name) { return {std::move(name), AttrKind::numeric, {}}; }
    static Attribute nominal(std::string name, std::vector<std::string> values) {
        return {std::move(name), AttrKind::nominal, std::move(values)};
    }
    static Attribute text(std::string name) { return {std::move(name), AttrKind::text, {}}; }

    std::optional<std::size_t> index_of(const std::string& value) const;

    bool operator==(const Attribute&) const = default;
};

// One cell of an instance. Exactly one of the payload fields is active,
// selected by kind; the factories keep the inactive ones zeroed so the
// defaulted comparison stays meaningful.
struct Cell {
    enum class Kind { missing, number, nominal, text };

    Kind kind = Kind::missing;
    double number = 0.0;
    std::size_t index = 0;
    std::string text;

    static Cell missing() { return {}; }
    static Cell num(double v) { return {Kind::number, v, 0, {}}; }
    static Cell nom(std::size_t i) { return {Kind::nominal, 0.0, i, {}}; }
    static Cell str(std::string s) { return {Kind::text, 0.0, 0, std::move(s)}; }

    bool is_missing() const { return kind == Kind::missing; }

    bool operator==(const Cell&) const = default;
};

using Instance = std::vector<Cell>;

struct Dataset {
    std::string relation;
    std::vector<Attribute> attributes;
    std::vector<Instance> instances;
    std::optional<std::size_t> class_index;  // must point at a nominal attribute

    std::optional<std::size_t> attribute_index(const std::string& name) const;

    bool operator==(const Dataset&) const = default;
};

// Checks the documented invariants (instance arity, nominal index ranges,
// nominal dictionaries non-empty and duplicate-free, class_index nominal).
// Throws Error on the first violation.
void validate(const Dataset& d);

struct FromCaptureOptions {
    bool info_nominal = false;  // type Info as nominal instead of string
};

// Seven attributes in export order: No. and Time and Length numeric,
// Source/Destination/Protocol nominal (first-appearance dictionaries),
// Info string unless options request nominal.
Dataset from_capture(const CaptureBatch& batch, const FromCaptureOptions& options = {});

// WEKA's unsupervised Remove filter: drops the listed attributes (1-based
// positions, duplicates ignored) and their cells, and annotates the
// relation name with the filter string. Instance order is unchanged.
Dataset remove_attributes(const Dataset& d, const std::vector<std::size_t>& positions);

// "1,2,3,7" -> compressed WEKA range list "1-3,7".
std::string format_index_ranges(std::vector<std::size_t> positions);

// Parses a WEKA-style range list ("1-3,7") into 1-based positions.
std::vector<std::size_t> parse_index_ranges(const std::string& text);

}  // namespace wireclass
