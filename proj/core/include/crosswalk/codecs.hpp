#pragma once

#include <string>
#include <string_view>

#include "crosswalk/target_model.hpp"

namespace crosswalk {

/// Serializes a model to its standard's wire format.
///
/// EAD/MODS emit XML with elements nested exactly as the paths dictate and
/// the record URI carried in xml:base on the root. DC/EDM emit Turtle with
/// the record URI as subject; EDM types the subject edm:ProvidedCHO and,
/// when an edm:isShownBy node is present, emits a distinct edm:WebResource
/// subject for the digitization. DS emits a flat JSON object keyed by
/// display-field names, value arrays where a field repeats. Output is
/// deterministic and newline-terminated.
///
/// Throws InvalidPathError when a node path is not in the standard's
/// vocabulary (unknown-prefixed nodes included).
Document encode(const TargetModel& model);

/// Parses a document back into a model. Content the standard's vocabulary
/// does not recognize becomes nodes under the reserved unknown prefix, so
/// nothing is discarded. decode(encode(m)) == m for every encodable model.
///
/// Throws MalformedDocumentError on syntax errors and WrongStandardError
/// when the document does not look like its declared standard.
TargetModel decode(const Document& document);

/// Appends the percent-encoded record id to the base. Encoding keeps
/// RFC 3986 unreserved characters and escapes everything else, so distinct
/// ids yield distinct URIs and the id can be recovered by decoding.
/// Throws InvalidBaseError unless base is an absolute URI ending in '/'.
std::string mint_uri(std::string_view record_id, std::string_view base);

} // namespace crosswalk
