#pragma once

#include "parityknot/algebra.hpp"
#include "parityknot/diagram.hpp"
#include "parityknot/errors.hpp"
#include "parityknot/fuzz.hpp"
#include "parityknot/groups.hpp"
#include "parityknot/invariants.hpp"
#include "parityknot/moves.hpp"
#include "parityknot/parity.hpp"
