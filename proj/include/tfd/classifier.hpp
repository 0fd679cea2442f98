#pragma once
// Case tree driver: emits the canonical list of topological fixed point data.
#include <map>
#include <string>
#include <vector>

#include "tfd/dh_engine.hpp"
#include "tfd/localization.hpp"
#include "tfd/splitting.hpp"

namespace tfd {

struct SliceSummary {
    int lo, hi;
    std::string model;
    std::string omega_lo;
    std::string euler;
    friend bool operator==(const SliceSummary&, const SliceSummary&) = default;
};

struct TFDRecord {
    std::string case_id;
    std::string group;       // e.g. "IV-2-1"
    std::string annotation;  // Mori-Mukai label of a Fano realization
    CriticalProfile profile;
    SurfaceModel model0;
    CohClass omega0;
    CohClass euler_minus2_plus;
    std::vector<FixedComponent> fixed;  // sorted by level, then (area, class)
    std::vector<CohClass> cycles;       // vanishing cycles at +1, in M_0
    int b_min = 0, b_max = 0, b2 = 0;
    i64 c1_cubed = 0;
    std::vector<SliceSummary> slices;

    std::vector<CohClass> z0_classes() const;
    i64 vol_z0() const;
};

struct BranchOutcome {
    std::string case_name;             // "I", "II", "III", "IV"
    std::string branch;                // e.g. "S2xS2" or "m=2 vol=2 b=(-1,-1) C={E1,E2}"
    std::map<std::string, int> unknowns;
    std::string status;  // "accepted" or a rejection reason
};

// One call of the splitting enumerator made while classifying.
struct SplittingInstance {
    SurfaceModel model;
    CohClass total;
    i64 vol;
};

struct ClassifierReport {
    std::vector<TFDRecord> records;
    std::vector<BranchOutcome> outcomes;
    std::vector<SplittingInstance> splitting_instances;
};

ClassifierReport classify_case_I();
ClassifierReport classify_case_II();
ClassifierReport classify_case_III();
ClassifierReport classify_case_IV();
ClassifierReport classify_all_report();
std::vector<TFDRecord> classify_all();
std::vector<TFDRecord> classify_case(const std::string& which);  // "I".."IV" or "all"

// Builds a record from raw branch data (no labels); throws TfdError on failure.
TFDRecord build_record(int b_min, const CriticalProfile& p, const std::vector<SplitPart>& z0,
                       const std::vector<CohClass>& cycles);
// Re-runs the DH engine from the record's extremal data.
DhSequence replay(const TFDRecord& r);
// The same data seen from the reversed circle action.
TFDRecord reverse_record(const TFDRecord& r);
TFDRecord canonicalize(const TFDRecord& r);
// Structural equality of canonical data (ignores labels).
bool same_tfd(const TFDRecord& a, const TFDRecord& b);
// Throws if any record invariant fails.
void check_record(const TFDRecord& r);

}  // namespace tfd
