#pragma once

#include "hcyc/exactlin/tensor.hpp"

#include <string>
#include <vector>

namespace hcyc {

struct CheckEntry {
  std::string axiom;
  bool passed = true;
  bool checked = true;
  std::vector<int> witness;  // basis multi-index where the identity first fails
  std::string detail;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  void pass(const std::string& axiom, std::string detail = {});
  void fail(const std::string& axiom, std::vector<int> witness, std::string detail = {});
  void unchecked(const std::string& axiom, std::string detail);
  void record(const std::string& axiom, bool ok, std::string detail = {});
  // lhs == rhs column by column; the witness is the decoded first bad column.
  bool expect_equal(const std::string& axiom, const Matrix& lhs, const Matrix& rhs, const TensorShape& dom);
  bool expect_equal(const std::string& axiom, const Matrix& lhs, const Matrix& rhs);
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const;
  const CheckEntry* find(const std::string& axiom) const;
  const std::vector<CheckEntry>& entries() const { return entries_; }
  const std::string& subject() const { return subject_; }
  int failures() const;
  std::string summary() const;

 private:
  std::string subject_;
  std::vector<CheckEntry> entries_;
};

}  // namespace hcyc
