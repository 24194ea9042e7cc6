#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orthoiir {

/// Pipeline stage that raised a design error.
enum class Stage { kSpec, kProjection, kRoots, kAssemble, kStabilize, kResponse, kIo };

const char* StageName(Stage stage);

/// Error raised by `Design` and the CLI; carries the stage that failed.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(Stage stage, const std::string& message)
      : std::runtime_error(std::string("[") + StageName(stage) + "] " + message), stage_(stage) {}

  Stage stage() const { return stage_; }

 private:
  Stage stage_;
};

/// Frequency response requested at (or within 1e-12 of) a pole.
class PoleEvaluationError : public std::domain_error {
 public:
  PoleEvaluationError(const std::string& message, std::size_t grid_index)
      : std::domain_error(message), grid_index_(grid_index) {}

  std::size_t grid_index() const { return grid_index_; }

 private:
  std::size_t grid_index_;
};

}  // namespace orthoiir
