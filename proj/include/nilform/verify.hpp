#pragma once

#include <string>
#include <vector>

namespace nilform {

// One row of the golden-suite runner. The criterion number groups rows for
// the acceptance summary; status is "pass", "fail" or "skipped".
struct VerifyCase {
  int criterion = 0;
  std::string name;
  std::string expected;
  std::string computed;
  std::string status;
  std::string notes;
};

struct VerifyOptions {
  unsigned long lift_seed = 1;  // seed for the random lift and property draws
  std::string table_path;       // empty: default knot-table search order
};

struct VerifySummary {
  std::vector<VerifyCase> cases;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

// Runs every golden case. Cases are independent; a failure in one (for
// example an unreadable knot table) never aborts the others.
VerifySummary run_verify(const VerifyOptions& opt = {});

// Aligned text table and JSON rendering of a summary.
std::string verify_table(const VerifySummary& s);
std::string verify_json(const VerifySummary& s);

}  // namespace nilform
