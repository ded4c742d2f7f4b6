#pragma once

namespace invsub::datasets {

extern const char* const finite_types_n1;
extern const char* const finite_types_n2;
extern const char* const finite_types_n3;
extern const char* const s15_records;

}  // namespace invsub::datasets
