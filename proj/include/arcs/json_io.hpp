#pragma once

#include <stdexcept>
#include <string>

#include "arcs/starter.hpp"

namespace arcs {

// Schema violation while reading a serialized system; `path` points at
// the first offending element.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, const std::string& what)
        : std::runtime_error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// Document layout (format_version 1), keys in this order:
//   {format_version, k, v, half_parallel_class, almost_parallel_classes}
// A vertex is the two-element array [a, b] (canonical residues) or the
// string "inf"; a cycle is an array of vertices; a class an array of
// cycles.  serialize -> parse -> serialize is byte-identical.
std::string to_json(const ArcsSystem& sys);
ArcsSystem system_from_json(const std::string& text);

// Human-readable listing; presentation only, not re-parseable.
std::string to_text(const ArcsSystem& sys);

}  // namespace arcs
