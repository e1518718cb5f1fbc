// Copyright 2026 The KWIC Annotator Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The worked "DC" example and the published listings it must reproduce.

#ifndef KWIC_TESTS_SUPPORT_GOLDEN_H_
#define KWIC_TESTS_SUPPORT_GOLDEN_H_

#include <string>

#include "kwic/model.h"

namespace kwic::testing {

// Contents of tests/<relative>.
std::string ReadTestFile(const std::string &relative);

// "La DC vince le elezioni." with "DC" marked as an Organization, bound to
// #DemocraziaCristiana ("Democrazia Cristiana") and linked to Q815348.
// Built through the engine: mark, import the entity, move the mention,
// link. The throwaway #DC entity ends up in the trash.
Document DcExample();

// A listing as published: wrapped lines are joined with one space (the
// wrap points fall between attributes) and the ontology-class placeholder
// is replaced by `ontology_class`. Returns one element per line.
std::string UnwrapListing(const std::string &listing,
                          const std::string &ontology_class);

}  // namespace kwic::testing

#endif  // KWIC_TESTS_SUPPORT_GOLDEN_H_
