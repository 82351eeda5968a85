#pragma once

#include "mrb/tensor.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mrb {

struct Failure {
    std::string identity;
    std::vector<std::string> labels;
    std::vector<std::size_t> basis;
    std::vector<std::string> basis_names;
    std::vector<Scalar> lhs;
    std::vector<Scalar> rhs;

    friend bool operator==(const Failure&, const Failure&) = default;
};

struct CertificateReport {
    CertificateReport() = default;
    explicit CertificateReport(std::string name) : check(std::move(name)) {}

    std::string check;
    std::vector<Failure> failures;
    std::size_t checked = 0;
    std::vector<std::string> notes;

    bool passed() const noexcept { return failures.empty(); }
    void merge(const CertificateReport& other, const std::string& prefix = {});
    std::string summary() const;
};

// One failure per input multi-index whose output vectors differ. axis_names, when
// given, names the basis of each input axis.
void compare_maps(CertificateReport& report, const std::string& identity, const std::vector<std::string>& labels,
                  const DenseTensor& lhs, const DenseTensor& rhs,
                  const std::vector<const std::vector<std::string>*>& axis_names = {});

} // namespace mrb
