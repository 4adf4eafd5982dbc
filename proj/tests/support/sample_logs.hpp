// SPDX-License-Identifier: Apache-2.0
//
// Representative sample lines from vendor telephony server logs, covering
// both timestamp dialects, wrapped messages, and the labeling edge cases
// (typed errors, "CriticalError", untyped lines that merely mention errors,
// and a debug line ending in "No Error"). Trailing blanks are part of the
// captured bytes; keep them.

#pragma once

#include <string>
#include <vector>

namespace lognb_tests {

// Each message is the ordered list of physical lines it spans.
using SampleMessage = std::vector<std::string>;

inline const SampleMessage kTypedError = {
    "20140604 103903.913 Error: ProntoEventServer. PE_Client removed on ",
    "Duration 8453ms Timeout 502ms StackSize 90",
};

inline const SampleMessage kPipeDelimitedError = {
    "06/04 142452.865|02488|error | CAlarmFilter |general |onXmlRead> ",
    "xml element \"alarms\" is ignored",
};

inline const SampleMessage kUppercaseErrorWithTrailingFields = {
    "20140604 063402.441 ERROR : dcb_open(dcbB1D1,NULL)=success (#=0) ",
    "InstanceName=TDialogicDevice dcbB1D1 ",
    "ClassName=TDialogicConferenceDevice MethodName=Initialize",
    "FileName=.\\DialogicDeviceConference.cpp LineNumber=138",
};

inline const SampleMessage kCriticalError = {
    "20140604 120353.022 CriticalError: Report: SQL Exception: Query: ",
    "sp_Pronto_AddAgentActivity ",
};

inline const SampleMessage kUntypedMentionsError = {
    "20140604 144846.946 04776 A:006 line 5 still in dialing mode. ",
    "Sending error 27 to dial command before ending the session",
};

inline const SampleMessage kUntypedHexPrefix = {
    "20140604 064238.541 11DE6B80: LineCallSpecificLine(1) return ",
    "ADVR_NO_ERROR",
};

inline const SampleMessage kDebugNoError = {
    "06/04 145011.634|01384 | debug |dispatcher |L:000 |LogMetaEventInfo>",
    "E=GCEV_ANSWERED (802h) : gc_ResultInfo()=0h; gcVal=500h, Normal ",
    "completion ccId=6h, GC_DM3CC_LIB ccVal=0h, No Error ",
};

inline const std::vector<SampleMessage> kAllSampleMessages = {
    kTypedError,
    kPipeDelimitedError,
    kUppercaseErrorWithTrailingFields,
    kCriticalError,
    kUntypedMentionsError,
    kUntypedHexPrefix,
    kDebugNoError,
};

inline std::vector<std::string> flatten(const std::vector<SampleMessage>& messages) {
    std::vector<std::string> lines;
    for (const SampleMessage& m : messages)
        lines.insert(lines.end(), m.begin(), m.end());
    return lines;
}

}  // namespace lognb_tests
