#include "gromov/error.hpp"

namespace gromov {

namespace {

std::string located(const std::string &path, int line, const std::string &what) {
  std::string out;
  if (line > 0)
    out += "line " + std::to_string(line) + ": ";
  if (!path.empty())
    out += path + ": ";
  return out + what;
}

} // namespace

ModelError::ModelError(std::string path, int line, const std::string &what)
    : Error("model", located(path, line, what)), path_(std::move(path)),
      line_(line) {}

} // namespace gromov
