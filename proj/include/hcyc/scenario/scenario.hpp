#pragma once

#include "hcyc/lierinehart/lie_rinehart.hpp"
#include "hcyc/operadcyc/operad.hpp"

#include <nlohmann/json.hpp>

#include <optional>

namespace hcyc::scenario {

inline constexpr int kSchemaVersion = 1;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ReferenceError : ParseError {
  using ParseError::ParseError;
};
struct DimensionMismatch : ParseError {
  using ParseError::ParseError;
};

struct CompModuleEntry {
  std::shared_ptr<const OperadData> operad;
  std::string operad_name;
  std::shared_ptr<const CompModuleData> module;
};

struct Task {
  std::string kind;  // validate | homology | measure | shuffle | induced
  nlohmann::ordered_json params;
};

struct ScenarioDocument {
  std::string name;
  FieldSpec field;
  std::map<std::string, AlgebraData> algebras;
  std::map<std::string, CoalgebraData> coalgebras;
  std::map<std::string, HopfPtr> hopf_algebroids;
  std::map<std::string, std::pair<std::string, SaydModule>> sayd_modules;  // (algebroid, module)
  std::map<std::string, std::pair<std::string, YdAlgebra>> yd_algebras;
  std::map<std::string, MeasuringData> measurings;
  std::map<std::string, ComoduleMeasuringData> comodule_measurings;
  std::map<std::string, YdMeasuringData> yd_measurings;
  std::map<std::string, std::shared_ptr<const LieRinehartData>> lie_rinehart;
  std::map<std::string, LrMeasuringData> lr_measurings;
  std::map<std::string, std::shared_ptr<const OperadData>> operads;
  std::map<std::string, CompModuleEntry> comp_modules;
  std::vector<Task> tasks;

  // object kind of a name, empty if unknown
  std::string kind_of(const std::string& name) const;
};

struct ParseOptions {
  std::optional<FieldSpec> field;  // overrides the document field
};

ScenarioDocument parse_scenario(const nlohmann::ordered_json& j, const ParseOptions& opt = {});
ScenarioDocument parse_scenario_file(const std::string& path, const ParseOptions& opt = {});
// every object written out with explicit structure constants
nlohmann::ordered_json emit_scenario(const ScenarioDocument& doc);

struct RunOptions {
  std::vector<std::string> kinds;  // empty: every task
  std::optional<int> max_degree;
  bool parallel = false;
  bool timing = false;
};

struct TaskResult {
  int index = 0;
  std::string kind;
  std::string status;  // pass | fail | error
  nlohmann::ordered_json body;
  double seconds = 0;
};

struct ReportDocument {
  std::vector<TaskResult> tasks;
  bool timing = false;
  int passed() const;
  int failed() const;
};

ReportDocument run(const ScenarioDocument& doc, const RunOptions& opt = {});

enum class Format { Json, Text };
std::string emit(const ReportDocument& r, Format fmt, bool pretty = false);

// verb -> task kinds
std::vector<std::string> kinds_for_verb(const std::string& verb);

// report form: entries [row, col, "p/q"]
nlohmann::ordered_json matrix_to_json(const Matrix& m);
// scenario form: entries [row, col, num, den] and [index, num, den]
Matrix matrix_from_json(const nlohmann::ordered_json& j, FieldSpec f, int rows, int cols, const std::string& where);
Vec vec_from_json(const nlohmann::ordered_json& j, FieldSpec f, int dim, const std::string& where);

}  // namespace hcyc::scenario
