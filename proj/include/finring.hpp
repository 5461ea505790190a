#pragma once

#include "finring/error.hpp"
#include "finring/ring.hpp"
#include "finring/witness.hpp"
#include "finring/group.hpp"
#include "finring/ideal.hpp"
#include "finring/structure.hpp"
#include "finring/hom.hpp"
#include "finring/builder.hpp"
#include "finring/constructors.hpp"
#include "finring/classify.hpp"
#include "finring/serialize.hpp"
#include "finring/dsl.hpp"
#include "finring/json_io.hpp"
#include "finring/verify.hpp"
