#include "mrb/labels.hpp"

#include "mrb/error.hpp"

#include <set>

namespace mrb {

LabelSet::LabelSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw Error(ErrorKind::ShapeMismatch, "label set must be nonempty");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw Error(ErrorKind::ShapeMismatch, "duplicate labels");
    for (const auto& l : labels_)
        if (l.find(',') != std::string::npos) throw Error(ErrorKind::ShapeMismatch, "labels may not contain ','");
}

LabelSet LabelSet::range(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(std::to_string(i));
    return LabelSet(std::move(v));
}

std::size_t LabelSet::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw Error(ErrorKind::UnknownLabel, "unknown label '" + label + "'");
}

std::size_t LabelSet::tuple_count(std::size_t length) const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < length; ++i) n *= labels_.size();
    return n;
}

std::size_t LabelSet::encode(const LabelTuple& t) const {
    std::size_t code = 0;
    for (auto x : t) {
        if (x >= labels_.size()) throw Error(ErrorKind::UnknownLabel, "label index out of range");
        code = code * labels_.size() + x;
    }
    return code;
}

LabelTuple LabelSet::decode(std::size_t code, std::size_t length) const {
    LabelTuple t(length);
    for (std::size_t k = length; k-- > 0;) {
        t[k] = code % labels_.size();
        code /= labels_.size();
    }
    return t;
}

std::vector<std::string> LabelSet::names_of(const LabelTuple& t) const {
    std::vector<std::string> out;
    for (auto x : t) out.push_back(labels_.at(x));
    return out;
}

std::string LabelSet::tuple_string(const LabelTuple& t) const {
    std::string s;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) s += ',';
        s += labels_.at(t[k]);
    }
    return s;
}

LabelTuple LabelSet::parse_tuple(const std::string& s) const {
    LabelTuple t;
    if (s.empty()) return t;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        t.push_back(index_of(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return t;
}

LabelTuple drop_at(const LabelTuple& t, std::size_t r) {
    LabelTuple out(t);
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(r));
    return out;
}

LabelTuple insert_at(const LabelTuple& t, std::size_t r, std::size_t label) {
    LabelTuple out(t);
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(r), label);
    return out;
}

} // namespace mrb
