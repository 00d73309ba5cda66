// Copyright 2026 The protodef Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>

#include "protodef/protocol.hpp"

namespace protodef {
namespace {

constexpr const char* kHeader =
    "; Optimistic contract signing with a trusted third party (TTP), one\n"
    "; session. Alice has already sent her commitment cm_A; Bob answers with\n"
    "; cm_B, then Alice sends her signed contract sc_A and Bob his sc_B.\n"
    "; Whoever is left waiting turns to the TTP: Alice asks to abort while\n"
    "; she lacks cm_B, otherwise the waiting party asks to resolve and\n"
    "; receives a replacement contract. The first request decides the\n"
    "; session and the TTP only answers the party that asked.\n"
    "; Outcome sign_X: agent X holds a contract signed by the other party.\n";

constexpr const char* kReliableNote =
    "; Reliable TTP: every request is answered.\n";

constexpr const char* kUnreliableNote =
    "; Unreliable TTP: at each request the TTP may stop, freezing the\n"
    "; session with whatever each party holds, or continue as specified.\n";

constexpr const char* kDeclarations =
    "(outcomes none sign_A sign_B sign_A+sign_B)\n"
    "(objective fair none sign_A+sign_B)\n"
    "(objective bob_protected none sign_B sign_A+sign_B)\n"
    "(objective alice_protected none sign_A sign_A+sign_B)\n";

std::string request(bool reliable, const std::string& stopped,
                    const std::string& answered) {
  if (reliable) return "(outcome " + answered + ")";
  return "(node TTP (stop (outcome " + stopped + ")) (continue (outcome " +
         answered + ")))";
}

std::string tree_text(bool reliable) {
  const std::string alice_resolves_late =
      "(node Alice (resolve " + request(reliable, "sign_B", "sign_A+sign_B") + "))";
  const std::string bob_resolves =
      "(node Bob (resolve " + request(reliable, "none", "sign_B") + "))";
  const std::string alice_aborts =
      "(node Alice (abort " + request(reliable, "none", "none") + "))";
  return "(node Bob (cm_B (node Alice (sc_A (node Bob (sc_B (outcome "
         "sign_A+sign_B)) (stop " +
         alice_resolves_late + "))) (stop " + bob_resolves + "))) (stop " +
         alice_aborts + "))";
}

}  // namespace

ProtocolTree asw_model(bool reliable_ttp) {
  const std::string agents =
      reliable_ttp ? "(agents Alice Bob)\n" : "(agents Alice Bob TTP)\n";
  return parse_protocol(agents + kDeclarations + tree_text(reliable_ttp));
}

std::string asw_source(bool reliable_ttp) {
  return std::string(kHeader) + (reliable_ttp ? kReliableNote : kUnreliableNote) +
         format_protocol(asw_model(reliable_ttp));
}

}  // namespace protodef
