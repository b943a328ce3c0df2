#include "qhilb/hilbert_function.hpp"

#include <numeric>

#include "qhilb/error.hpp"

namespace qhilb {

HilbertFunction::HilbertFunction(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_) require(v >= 0, "HilbertFunction: entries must be non-negative");
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
  total_ = std::accumulate(values_.begin(), values_.end(), 0);
}

int HilbertFunction::operator[](int i) const {
  if (i < 0) throw PreconditionError("HilbertFunction: negative index without slope context");
  return i < support_end() ? values_[static_cast<std::size_t>(i)] : 0;
}

int HilbertFunction::extended(int i, int k) const {
  if (i >= 0) return (*this)[i];
  if (i >= -k) return 0;
  if (i == -k - 1) return -1;
  throw PreconditionError("HilbertFunction: index below -k-1 is undefined");
}

std::string HilbertFunction::to_string() const {
  if (values_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values_[i]);
  }
  return s;
}

}  // namespace qhilb
