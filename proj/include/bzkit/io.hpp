/**
 * @file io.hpp
 * @brief JSON and text-form conversions for the core types.
 *
 * Schemas:
 *   WeightVector  {"kind":"finite","lo":1,"hi":2,"coeffs":{"1":-1}}
 *                 {"kind":"affine","l":3,"coeffs":{"0":-1}}
 *   MayaFinite    {"lo":1,"hi":2,"members":[1,3]}
 *   MayaCharged   {"charge":1,"shape":[1],"side":"particle"}
 *   LusztigFinite {"lo":1,"hi":2,"entries":[{"i":1,"j":2,"a":1}]}   (absent = 0)
 *   LusztigAffine {"l":3,"entries":[{"res":0,"len":1,"mult":1}]}
 *   BZFinite      {"lo":1,"hi":2,"components":[{"k":[1],"M":0},...]}
 *                 (all components required on input, total on output)
 *
 * Text forms: "I=1..2;{1,3}" and "r=1;lambda=2,1[;hole]".
 */
#pragma once

#include <string>

#include "json.hpp"

#include "bzkit/bz_finite.hpp"
#include "bzkit/lusztig_affine.hpp"
#include "bzkit/lusztig_finite.hpp"
#include "bzkit/maya.hpp"

namespace bzkit {

using nlohmann::json;

json to_json(const WeightVector& w);
WeightVector weight_from_json(const json& j);

json to_json(const MayaFinite& k);
MayaFinite maya_finite_from_json(const json& j);

json to_json(const MayaCharged& k);
MayaCharged maya_charged_from_json(const json& j);

json to_json(const LusztigFinite& a);
LusztigFinite lusztig_finite_from_json(const json& j);

json to_json(const LusztigAffine& a);
LusztigAffine lusztig_affine_from_json(const json& j);

json to_json(const BZFinite& M);
BZFinite bz_finite_from_json(const json& j);

MayaFinite parse_maya_finite(const std::string& text);
MayaCharged parse_maya_charged(const std::string& text);

Partition parse_partition(const std::string& text); // "2,1" or ""

} // namespace bzkit
