#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mrb {

using LabelTuple = std::vector<std::size_t>;

// Finite ordered label set. Tuples of labels are enumerated lexicographically
// with the first position most significant.
class LabelSet {
  public:
    LabelSet() = default;
    explicit LabelSet(std::vector<std::string> labels);
    static LabelSet range(std::size_t n);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& operator[](std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& names() const noexcept { return labels_; }
    std::size_t index_of(const std::string& label) const;

    std::size_t tuple_count(std::size_t length) const;
    std::size_t encode(const LabelTuple& t) const;
    LabelTuple decode(std::size_t code, std::size_t length) const;
    std::vector<std::string> names_of(const LabelTuple& t) const;
    std::string tuple_string(const LabelTuple& t) const;
    LabelTuple parse_tuple(const std::string& s) const;

    friend bool operator==(const LabelSet&, const LabelSet&) = default;

  private:
    std::vector<std::string> labels_;
};

// Helpers for the suppressed-position convention: drop or insert entry r (0-based).
LabelTuple drop_at(const LabelTuple& t, std::size_t r);
LabelTuple insert_at(const LabelTuple& t, std::size_t r, std::size_t label);

} // namespace mrb
