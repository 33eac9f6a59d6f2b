#include "ordtopia/report.hpp"

namespace ordtopia {

const char* status_name(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "skip";
}

}  // namespace ordtopia
