/*
 * Error taxonomy shared by the library and the command line tool.
 * Three kinds, mapped to process exit codes by the CLI:
 *   input    -> 2   bad files, bad arguments, domain violations
 *   internal -> 1   invariants the library itself must uphold
 *   resource -> 3   enumeration budget or hard gates exceeded
 */
#pragma once

#include <stdexcept>
#include <string>

namespace psidet {

enum class errkind { input, internal, resource };

class error : public std::runtime_error {
public:
  error(errkind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
  errkind kind() const { return kind_; }
  int exit_code() const {
    switch (kind_) {
      case errkind::internal: return 1;
      case errkind::input: return 2;
      case errkind::resource: return 3;
    }
    return 1;
  }

private:
  errkind kind_;
};

[[noreturn]] inline void throw_input(const std::string& msg) { throw error(errkind::input, msg); }
[[noreturn]] inline void throw_internal(const std::string& msg) { throw error(errkind::internal, msg); }
[[noreturn]] inline void throw_resource(const std::string& msg) { throw error(errkind::resource, msg); }

inline void require_input(bool ok, const std::string& msg) {
  if (!ok) throw_input(msg);
}
inline void require_internal(bool ok, const std::string& msg) {
  if (!ok) throw_internal(msg);
}

} // namespace psidet
