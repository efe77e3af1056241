#pragma once

#include "homspace/extension.hpp"
#include "homspace/groupmodel.hpp"

#include <string>

namespace homspace {

inline constexpr const char* kVersion = "1.0.0";

struct RenderOptions {
  bool json = false;
  bool color = false; // ANSI bold headings in text mode
};

// Each renderer returns the full output, newline-terminated. Output depends
// only on the arguments.
std::string render_describe(const ReductiveModel& h, const RenderOptions& opt);
std::string render_invariants(const ReductiveModel& h, const RenderOptions& opt);
std::string render_weights(const ReductiveModel& h, const RenderOptions& opt);
std::string render_ext(const Character& chi, const RenderOptions& opt);
std::string render_snf(const IntMatrix& m, const RenderOptions& opt);
std::string render_error(const std::string& code, const std::string& where, const std::string& message, bool json);

} // namespace homspace
