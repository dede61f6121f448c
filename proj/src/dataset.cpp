#include "wireclass/dataset.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "wireclass/text.hpp"

namespace wireclass {

std::optional<std::size_t> Attribute::index_of(const std::string& value) const {
    auto it = std::find(values.begin(), values.end(), value);
    if (it == values.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - values.begin());
}

std::optional<std::size_t> Dataset::attribute_index(const std::string& name) const {
    for (std::size_t i = 0; i < attributes.size(); ++i)
        if (attributes[i].name == name)
            return i;
    return std::nullopt;
}

void validate(const Dataset& d) {
    for (const Attribute& a : d.attributes) {
        if (a.kind == AttrKind::nominal) {
            if (a.values.empty())
                throw Error("nominal attribute '" + a.name + "' has an empty value list");
            std::unordered_set<std::string> seen;
            for (const std::string& v : a.values)
                if (!seen.insert(v).second)
                    throw Error("nominal attribute '" + a.name + "' has duplicate value '" + v +
                                "'");
        } else if (!a.values.empty()) {
            throw Error("non-nominal attribute '" + a.name + "' carries a value list");
        }
    }
    if (d.class_index) {
        if (*d.class_index >= d.attributes.size())
            throw Error("class index out of range");
        if (d.attributes[*d.class_index].kind != AttrKind::nominal)
            throw Error("class attribute must be nominal");
    }
    for (std::size_t r = 0; r < d.instances.size(); ++r) {
        const Instance& inst = d.instances[r];
        if (inst.size() != d.attributes.size())
            throw Error("instance " + std::to_string(r) + " arity " +
                        std::to_string(inst.size()) + " != attribute count " +
                        std::to_string(d.attributes.size()));
        for (std::size_t c = 0; c < inst.size(); ++c) {
            const Cell& cell = inst[c];
            const Attribute& attr = d.attributes[c];
            switch (cell.kind) {
                case Cell::Kind::missing:
                    break;
                case Cell::Kind::number:
                    if (attr.kind != AttrKind::numeric)
                        throw Error("numeric cell under non-numeric attribute '" + attr.name +
                                    "'");
                    break;
                case Cell::Kind::nominal:
                    if (attr.kind != AttrKind::nominal)
                        throw Error("nominal cell under non-nominal attribute '" + attr.name +
                                    "'");
                    if (cell.index >= attr.values.size())
                        throw Error("nominal index out of range for attribute '" + attr.name +
                                    "'");
                    break;
                case Cell::Kind::text:
                    if (attr.kind != AttrKind::text)
                        throw Error("string cell under non-string attribute '" + attr.name + "'");
                    break;
            }
        }
    }
}

namespace {

// Incremental first-appearance dictionary for one nominal column.
class NominalBuilder {
public:
    std::size_t index_for(const std::string& value) {
        auto [it, inserted] = map_.try_emplace(value, values_.size());
        if (inserted)
            values_.push_back(value);
        return it->second;
    }
    std::vector<std::string> take() { return std::move(values_); }

private:
    std::unordered_map<std::string, std::size_t> map_;
    std::vector<std::string> values_;
};

}  // namespace

Dataset from_capture(const CaptureBatch& batch, const FromCaptureOptions& options) {
    if (batch.records.empty())
        throw EmptyDatasetError();

    NominalBuilder source, destination, protocol, info;
    Dataset d;
    d.relation = batch.label.empty() ? "capture" : batch.label;
    d.instances.reserve(batch.records.size());
    for (const PacketRecord& r : batch.records) {
        Instance inst;
        inst.reserve(7);
        inst.push_back(Cell::num(static_cast<double>(r.no)));
        inst.push_back(Cell::num(r.time));
        inst.push_back(Cell::nom(source.index_for(r.source)));
        inst.push_back(Cell::nom(destination.index_for(r.destination)));
        inst.push_back(Cell::nom(protocol.index_for(r.protocol)));
        inst.push_back(Cell::num(static_cast<double>(r.length)));
        inst.push_back(options.info_nominal ? Cell::nom(info.index_for(r.info))
                                            : Cell::str(r.info));
        d.instances.push_back(std::move(inst));
    }
    d.attributes.push_back(Attribute::numeric("No."));
    d.attributes.push_back(Attribute::numeric("Time"));
    d.attributes.push_back(Attribute::nominal("Source", source.take()));
    d.attributes.push_back(Attribute::nominal("Destination", destination.take()));
    d.attributes.push_back(Attribute::nominal("Protocol", protocol.take()));
    d.attributes.push_back(Attribute::numeric("Length"));
    d.attributes.push_back(options.info_nominal ? Attribute::nominal("Info", info.take())
                                                : Attribute::text("Info"));
    return d;
}

std::string format_index_ranges(std::vector<std::size_t> positions) {
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    std::string out;
    std::size_t i = 0;
    while (i < positions.size()) {
        std::size_t j = i;
        while (j + 1 < positions.size() && positions[j + 1] == positions[j] + 1)
            ++j;
        if (!out.empty())
            out += ',';
        out += std::to_string(positions[i]);
        if (j > i)
            out += '-' + std::to_string(positions[j]);
        i = j + 1;
    }
    return out;
}

std::vector<std::size_t> parse_index_ranges(const std::string& text) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string part(trim(std::string_view(text).substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (!part.empty()) {
            std::size_t dash = part.find('-');
            if (dash == std::string::npos) {
                auto v = parse_plain_integer(part);
                if (!v || *v < 1)
                    throw Error("bad index '" + part + "' in range list");
                out.push_back(static_cast<std::size_t>(*v));
            } else {
                auto lo = parse_plain_integer(part.substr(0, dash));
                auto hi = parse_plain_integer(part.substr(dash + 1));
                if (!lo || !hi || *lo < 1 || *hi < *lo)
                    throw Error("bad range '" + part + "' in range list");
                for (std::int64_t v = *lo; v <= *hi; ++v)
                    out.push_back(static_cast<std::size_t>(v));
            }
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

Dataset remove_attributes(const Dataset& d, const std::vector<std::size_t>& positions) {
    std::vector<std::size_t> sorted(positions);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t p : sorted)
        if (p < 1 || p > d.attributes.size())
            throw IndexOutOfRangeError("attribute position " + std::to_string(p) +
                                       " out of range 1.." + std::to_string(d.attributes.size()));

    std::vector<bool> removed(d.attributes.size(), false);
    for (std::size_t p : sorted)
        removed[p - 1] = true;

    Dataset out;
    out.relation = d.relation;
    if (!sorted.empty())
        out.relation += "-weka.filters.unsupervised.attribute.Remove-R" +
                        format_index_ranges(sorted);
    for (std::size_t i = 0; i < d.attributes.size(); ++i)
        if (!removed[i])
            out.attributes.push_back(d.attributes[i]);
    out.instances.reserve(d.instances.size());
    for (const Instance& inst : d.instances) {
        Instance kept;
        kept.reserve(out.attributes.size());
        for (std::size_t i = 0; i < inst.size(); ++i)
            if (!removed[i])
                kept.push_back(inst[i]);
        out.instances.push_back(std::move(kept));
    }
    if (d.class_index && !removed[*d.class_index]) {
        std::size_t shift = 0;
        for (std::size_t i = 0; i < *d.class_index; ++i)
            if (removed[i])
                ++shift;
        out.class_index = *d.class_index - shift;
    }
    return out;
}

}  // namespace wireclass
