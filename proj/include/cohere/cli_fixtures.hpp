#pragma once

#include <map>
#include <string>

namespace cohere {

struct BundledFixture {
    std::string summary;
    std::string text;
};

/// Definition files shipped with the CLI, by name.
inline const std::map<std::string, BundledFixture>& bundled_fixtures() {
    static const std::map<std::string, BundledFixture> f{
        {"inner_s3",
         {"inner-automorphism crossed module of S3, its trivial/sign/standard 2-rep and an associated bundle",
          R"json({
  "schema": "cohere-definitions/1",
  "groups": [{"name": "S3", "symmetric": 3}],
  "actions": [{"name": "conj", "of": "S3", "on": "S3", "kind": "conjugation"}],
  "crossed_modules": [{"name": "inner_s3", "H": "S3", "G": "S3", "boundary": "identity", "action": "conj"}],
  "groupoids": [{"name": "BS3", "delooping": "S3"}],
  "reps": [
    {"name": "trivial", "on": "BS3", "kind": "trivial", "dim": 1},
    {"name": "sign", "on": "BS3", "dim": 1,
     "matrices": {"021": ["-1"], "102": ["-1"], "120": ["1"], "201": ["1"], "210": ["-1"]}},
    {"name": "standard", "on": "BS3", "dim": 2,
     "matrices": {"021": ["1", "0", "1", "-1"], "102": ["-1", "1", "0", "1"], "120": ["0", "-1", "1", "-1"],
                  "201": ["-1", "1", "-1", "0"], "210": ["0", "-1", "-1", "0"]}}
  ],
  "two_reps": [{"name": "inner_s3_2rep", "kind": "crossed", "crossed_module": "inner_s3",
                "reps": ["trivial", "sign", "standard"]}],
  "covers": [{"name": "three_of_five", "points": ["p0", "p1", "p2", "p3", "p4"],
              "pieces": [["p0", "p1", "p2", "p3"], ["p2", "p3", "p4"], ["p0", "p1", "p4"]]}],
  "descent_data": [{"name": "inner_s3_bundle", "cover": "three_of_five", "two_rep": "inner_s3_2rep",
                    "cocycle": {"seed": 7}}]
}
)json"}},
        {"z3_inversion_doubled",
         {"(Z/3 -> 1, Z/2 inversion) doubled along a twisted section; nonidentity associator",
          R"json({
  "schema": "cohere-definitions/1",
  "groups": [{"name": "Z2", "cyclic": 2}, {"name": "Z3", "cyclic": 3}],
  "actions": [{"name": "inversion", "of": "Z2", "on": "Z3", "table": [["0", "1", "2"], ["0", "2", "1"]]}],
  "crossed_modules": [{"name": "z3_inversion", "H": "Z3", "G": "Z2", "boundary": "trivial", "action": "inversion"}],
  "inclusions": [{"name": "z3_doubled", "crossed_module": "z3_inversion",
                  "image_twist": ["(0,1)", "(1,1)"], "copy_twist": ["(0,2)", "(1,2)"]}],
  "reps": [{"name": "trivial", "on": "z3_doubled", "kind": "trivial", "dim": 1}],
  "two_reps": [{"name": "z3_doubled_2rep", "kind": "canonical", "two_group": "z3_doubled", "reps": ["trivial"]}],
  "covers": [{"name": "four_of_six", "points": ["p0", "p1", "p2", "p3", "p4", "p5"],
              "pieces": [["p0", "p1", "p2", "p3"], ["p2", "p3", "p4", "p5"], ["p0", "p1", "p4", "p5"], ["p0", "p2", "p4"]]}],
  "descent_data": [{"name": "z3_doubled_bundle", "cover": "four_of_six", "two_rep": "z3_doubled_2rep",
                    "cocycle": {"seed": 11}}]
}
)json"}},
        {"corrupted_associator",
         {"strict (Z/2 -> Z/3) with one associator component moved off the identity; fails the pentagon",
          R"json({
  "schema": "cohere-definitions/1",
  "groups": [{"name": "Z2", "cyclic": 2}, {"name": "Z3", "cyclic": 3}],
  "actions": [{"name": "trivial", "of": "Z3", "on": "Z2", "kind": "trivial"}],
  "crossed_modules": [{"name": "z2_in_z3", "H": "Z2", "G": "Z3", "boundary": "trivial", "action": "trivial"}],
  "two_groups": [{"name": "corrupted", "from": "z2_in_z3",
                  "associator": [{"at": ["1", "1", "1"], "arrow": "(0,1)"}]}],
  "audits": [{"audit": "coherence", "target": "corrupted"}]
}
)json"}},
        {"identity_cyclic",
         {"id: Z/4 -> Z/4 with the trivial action and an explicit strict cocycle",
          R"json({
  "schema": "cohere-definitions/1",
  "groups": [{"name": "Z4", "cyclic": 4}],
  "actions": [{"name": "trivial", "of": "Z4", "on": "Z4", "kind": "trivial"}],
  "crossed_modules": [{"name": "id_z4", "H": "Z4", "G": "Z4", "boundary": "identity", "action": "trivial"}],
  "covers": [{"name": "two_of_three", "points": ["a", "b", "c"], "pieces": [["a", "b"], ["b", "c"]]}],
  "descent_data": [{"name": "id_z4_cocycle", "cover": "two_of_three", "two_group": "id_z4",
                    "cocycle": {"x": [["0", "1", "2"], ["3", "3", "1"]]}}]
}
)json"}},
    };
    return f;
}

}  // namespace cohere
