#include "hcyc/algcore/report.hpp"

#include <sstream>

namespace hcyc {

void Report::pass(const std::string& axiom, std::string detail) {
  entries_.push_back({axiom, true, true, {}, std::move(detail)});
}

void Report::fail(const std::string& axiom, std::vector<int> witness, std::string detail) {
  entries_.push_back({axiom, false, true, std::move(witness), std::move(detail)});
}

void Report::unchecked(const std::string& axiom, std::string detail) {
  entries_.push_back({axiom, true, false, {}, std::move(detail)});
}

void Report::record(const std::string& axiom, bool ok, std::string detail) {
  if (ok)
    pass(axiom, std::move(detail));
  else
    fail(axiom, {}, std::move(detail));
}

bool Report::expect_equal(const std::string& axiom, const Matrix& lhs, const Matrix& rhs, const TensorShape& dom) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    fail(axiom, {}, "shape mismatch");
    return false;
  }
  auto j = lhs.first_diff_col(rhs);
  if (!j) {
    pass(axiom);
    return true;
  }
  std::vector<int> w = dom.order() ? dom.decode(*j) : std::vector<int>{*j};
  fail(axiom, std::move(w), "column " + std::to_string(*j));
  return false;
}

bool Report::expect_equal(const std::string& axiom, const Matrix& lhs, const Matrix& rhs) {
  return expect_equal(axiom, lhs, rhs, TensorShape());
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto e : other.entries_) {
    if (!prefix.empty()) e.axiom = prefix + "/" + e.axiom;
    entries_.push_back(std::move(e));
  }
}

bool Report::passed() const {
  for (auto& e : entries_)
    if (!e.passed) return false;
  return true;
}

const CheckEntry* Report::find(const std::string& axiom) const {
  for (auto& e : entries_)
    if (e.axiom == axiom) return &e;
  return nullptr;
}

int Report::failures() const {
  int n = 0;
  for (auto& e : entries_) n += !e.passed;
  return n;
}

std::string Report::summary() const {
  std::ostringstream os;
  os << subject_ << ": " << entries_.size() - failures() << "/" << entries_.size() << " checks pass";
  for (auto& e : entries_)
    if (!e.passed) {
      os << "\n  FAIL " << e.axiom << " at (";
      for (std::size_t i = 0; i < e.witness.size(); ++i) os << (i ? "," : "") << e.witness[i];
      os << ")";
      if (!e.detail.empty()) os << " " << e.detail;
    }
  return os.str();
}

}  // namespace hcyc
