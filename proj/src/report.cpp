#include "mrb/report.hpp"

#include "mrb/error.hpp"

#include <sstream>

namespace mrb {

void CertificateReport::merge(const CertificateReport& other, const std::string& prefix) {
    for (auto f : other.failures) {
        if (!prefix.empty()) f.identity = prefix + "/" + f.identity;
        failures.push_back(std::move(f));
    }
    checked += other.checked;
    for (const auto& n : other.notes) notes.push_back(prefix.empty() ? n : prefix + ": " + n);
}

void compare_maps(CertificateReport& report, const std::string& identity, const std::vector<std::string>& labels,
                  const DenseTensor& lhs, const DenseTensor& rhs,
                  const std::vector<const std::vector<std::string>*>& axis_names) {
    if (lhs.shape() != rhs.shape()) throw Error(ErrorKind::ShapeMismatch, identity + ": sides have different shapes");
    std::size_t out = lhs.out_dim();
    std::size_t n = out == 0 ? 0 : lhs.size() / out;
    for (std::size_t k = 0; k < n; ++k) {
        ++report.checked;
        bool same = true;
        for (std::size_t o = 0; o < out && same; ++o) same = lhs[k * out + o] == rhs[k * out + o];
        if (same) continue;
        Failure f;
        f.identity = identity;
        f.labels = labels;
        auto idx = lhs.multi_index(k * out);
        idx.pop_back();
        f.basis = idx;
        if (axis_names.size() == idx.size())
            for (std::size_t a = 0; a < idx.size(); ++a)
                f.basis_names.push_back(axis_names[a] ? axis_names[a]->at(idx[a]) : std::to_string(idx[a]));
        f.lhs.assign(lhs.data().begin() + k * out, lhs.data().begin() + (k + 1) * out);
        f.rhs.assign(rhs.data().begin() + k * out, rhs.data().begin() + (k + 1) * out);
        report.failures.push_back(std::move(f));
    }
}

std::string CertificateReport::summary() const {
    std::ostringstream os;
    os << check << ": " << (passed() ? "pass" : "FAIL") << " (" << checked << " instances checked, "
       << failures.size() << " failures)";
    std::size_t shown = 0;
    for (const auto& f : failures) {
        if (shown++ == 5) {
            os << "\n  ...";
            break;
        }
        os << "\n  " << f.identity;
        if (!f.labels.empty()) {
            os << " labels=(";
            for (std::size_t i = 0; i < f.labels.size(); ++i) os << (i ? "," : "") << f.labels[i];
            os << ")";
        }
        os << " basis=(";
        for (std::size_t i = 0; i < f.basis.size(); ++i)
            os << (i ? "," : "") << (f.basis_names.size() == f.basis.size() ? f.basis_names[i] : std::to_string(f.basis[i]));
        os << ")";
    }
    for (const auto& n : notes) os << "\n  note: " << n;
    return os.str();
}

} // namespace mrb
