#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zignorm/zigzag.hpp"

namespace zignorm {

/// One singular-height index per dimension level, top down to dimension 0.
using ContentAddress = std::vector<std::size_t>;

/// The allowed generators together with their canonical typing diagrams.
/// Typing diagrams are stored normal and globular, with singular content
/// exactly the generator itself.
class Signature {
 public:
  struct Entry {
    Generator generator;
    Diagram typing;
  };

  /// Validates and canonicalises the entries.  A typing diagram that is not
  /// already normal is replaced by its normal form, with a warning.
  static Signature make(std::vector<Entry> entries, std::vector<std::string>* warnings = nullptr);

  const std::vector<Entry>& entries() const { return entries_; }
  const Entry* find(const std::string& name) const;

 private:
  std::vector<Entry> entries_;
};

/// The multiset of level-0 generators in singular position, with their
/// addresses in lexicographic order.
std::vector<std::pair<ContentAddress, Generator>> singular_content(const Diagram& d);

/// The piece around one content element: the length-1 zigzag at the
/// address's first height, with the singular object restricted along the
/// remaining path and both regular objects and cospan maps restricted by
/// recursive preimage.  Heights whose deeper content falls outside the kept
/// trajectory restrict to slices with no singular heights.
Diagram extract_piece(const Diagram& d, const ContentAddress& address);

struct TypecheckVerdict {
  bool accepted = true;
  ContentAddress first_failing_address;
  std::string failing_label;
};

/// Accepts iff every piece normalises to the typing diagram of its content
/// element (lifted by degenerate levels to the diagram's dimension).
TypecheckVerdict typecheck(const Diagram& d, const Signature& signature);

}  // namespace zignorm
