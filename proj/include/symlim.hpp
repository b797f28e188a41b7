#pragma once

#include "symlim/errors.hpp"
#include "symlim/numeric.hpp"
#include "symlim/permgroup.hpp"
#include "symlim/embedding.hpp"
#include "symlim/partitions.hpp"
#include "symlim/yor.hpp"
#include "symlim/characters.hpp"
#include "symlim/limits.hpp"
#include "symlim/odometer.hpp"
#include "symlim/classify.hpp"
#include "symlim/io.hpp"
