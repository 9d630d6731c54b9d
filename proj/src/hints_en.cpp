// Copyright 2026 The sb3lint Authors.
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

#include "sb3lint/hints.hpp"

namespace sb3lint::hints {

const char* englishBundle() {
  return R"(# English hint texts, one line per finder id.
ambiguous_custom_block_signature=The custom block '{proccode}' is defined {count} times in '{sprite}'. Scratch cannot tell the definitions apart, so a call may run either one. Rename or remove the duplicates.
ambiguous_parameter_name=The custom block '{proccode}' has more than one parameter named '{param}'. Uses inside the block cannot be told apart. Give each parameter its own name.
call_without_definition=This block calls the custom block '{proccode}', but no such block is defined in this sprite. Define it or delete the call.
expression_as_touching_or_color=This slot expects a {expected} value, but '{opcode}' is plugged in. The check will not work the way it reads. Pick a fitting value from the menu instead.
illegal_parameter_refactor=The text parameter '{param}' is used where a true/false condition belongs. It never behaves like a condition. Use a boolean parameter instead.
missing_termination_condition=This 'repeat until' has no condition, so it repeats forever. Add the condition that should end the loop.
missing_wait_until_condition=This 'wait until' has no condition, so the script waits forever. Add the condition it should wait for.
orphaned_parameter=The parameter '{param}' is no longer declared by the custom block '{proccode}'. It only reports an empty default now. Remove it or declare the parameter again.
parameter_out_of_scope=The parameter '{param}' is used outside the custom block that defines it. Out here it has no value. Move the blocks into the custom block or use a variable.
missing_backdrop_switch=This script waits for the backdrop to switch to '{backdrop}', but no block ever switches to it, so the script never runs. Add a 'switch backdrop to' block or remove the script.
missing_erase_all=This project draws with the pen but never erases. After a restart the old lines are still there. Add an 'erase all' block, for example when the green flag is clicked.
missing_pen_down=A 'pen up' block is used, but the pen is never put down, so nothing is ever drawn. Add a 'pen down' block where drawing should start.
missing_pen_up=The pen is put down but never lifted, so the sprite draws a line everywhere it goes. Add a 'pen up' block where drawing should stop.
missing_resource=The {kind} '{name}' is used here, but '{sprite}' has no {kind} with that name. Choose an existing {kind} or add one named '{name}'.
stuttering_movement=Pressing '{key}' moves the sprite only once per key repeat, which looks jerky. Use a forever loop with 'if key pressed' to move smoothly while the key is held.
blocking_if_else=Both branches of this if-else stop the script, so the blocks after it can never run. Remove the blocks after the if-else or let one branch continue.
comparing_literals=This comparison checks {left} against {right}. Both are fixed values, so the result is always the same. Did you mean to compare a variable?
custom_block_with_forever=The custom block '{proccode}' ends in a forever loop and never returns, so the blocks after this call can never run. Move the blocks or remove the forever loop.
custom_block_with_termination=The custom block '{proccode}' always stops the script, so the blocks after this call can never run. Move them before the call or change the custom block.
delete_clone_after_broadcast=This clone deletes itself right after broadcasting '{message}'. If the clone should react to the message, it is already gone. Use 'broadcast and wait' or reorder the blocks.
endless_recursion='{name}' triggers itself with nothing to stop it, so it runs forever. Add a condition that ends the recursion.
forever_inside_loop=A forever loop inside another loop never finishes, so the outer loop never gets past its first round. Remove one of the loops.
inappropriate_hatblock=This green-flag script deletes 'this clone', but when the green flag is clicked the sprite is not a clone. Use 'when I start as a clone' for clone cleanup.
interrupted_loop_sensing=This loop checks a condition but also runs '{opcode}', which takes time. While it runs the condition is not checked, so events can be missed. Sense in its own loop.
message_never_received=The message '{message}' is broadcast here, but no script receives it, so the broadcast does nothing. Add a 'when I receive' script or remove the broadcast.
message_never_sent=This script waits for the message '{message}', but nothing ever broadcasts it, so the script never runs. Add a broadcast or remove the script.
missing_ask=The 'answer' block is used, but the project never asks a question, so 'answer' stays empty. Add an 'ask and wait' block before reading the answer.
missing_clone_call=This 'when I start as a clone' script never runs because '{sprite}' is never cloned. Add a 'create clone of' block somewhere.
missing_clone_initialization=A clone of '{target}' is created here, but '{target}' has no 'when I start as a clone' script, so the clone just sits there. Add the clone script.
missing_initialization='{name}' is used here before it is set. The value left over from the last run is used, which can cause surprises. Set it at the start of the script.
missing_loop_sensing=This condition is checked only once, at the moment the script reaches it. If it should react whenever the condition becomes true, check it inside a forever loop.
no_working_scripts=None of the scripts in '{sprite}' can run: they are empty or not attached to an event block. Attach them to a hat block or remove them.
position_equals_check=This check compares a position for exact equality. Positions move in steps and can skip the exact value, so the check may never become true. Compare with < or > instead.
recursive_cloning=Every clone of '{sprite}' immediately creates another clone, so clones multiply until Scratch refuses to make more. Add a condition around 'create clone'.
stop_after_say=The script stops right after 'say', so the speech bubble vanishes immediately. Use 'say for seconds' or drop the stop.
terminated_loop=This loop is stopped during its first round, so it never actually repeats. Remove the loop or make the stop conditional.
type_error=This comparison checks the text {left} against the number {right}; they can never match. Check whether you picked the right block or value.
variable_as_literal=The text '{literal}' is written here as a plain value, but a variable with that name exists. Did you mean to use the variable block '{literal}' instead of writing its name?
busy_waiting=This forever loop only waits for a condition to stop the script. A single 'wait until' block does the same and is easier to read.
cloned_code=These {length} blocks appear again elsewhere (type {type} clone). Move them into a custom block so the code exists only once.
code_lying_around=These blocks are not connected to any event block, so they never run. Delete them or attach them under a hat block.
double_if=Two ifs in a row check the same condition. Merge them into a single if block.
duplicate_sprite='{sprite}' and '{other}' contain exactly the same scripts. Consider clones or shared custom blocks instead of copied sprites.
duplicated_script=This sprite contains the same script twice. Remove one copy, or use a custom block if the steps are needed in two places.
empty_control_body=This '{kind}' block has an empty body, so it does nothing. Put blocks inside it or remove it.
empty_custom_block=The custom block '{proccode}' has no body, so calling it does nothing. Fill it or delete it.
empty_project=The project has no sprites and no scripts on the stage, so nothing can happen yet. Add a sprite and give it a script.
empty_script=This event block has nothing underneath, so nothing happens when it fires. Add blocks or remove the hat.
empty_sprite=The sprite '{sprite}' has no scripts at all. Give it behavior or remove it.
long_script=This script is {length} blocks long (more than {threshold}). Long scripts are hard to follow. Split it using custom blocks or messages.
message_naming=The message name '{message}' does not say what it triggers. Rename it so readers can tell what happens.
middle_man=This {kind} only passes the work on to '{target}'. Trigger '{target}' directly and remove the extra step.
multi_attribute_modification='{name}' is changed {count} times in a row; only the combined result remains. Merge these blocks into one.
nested_loops=This loop contains nothing but another loop. The outer loop adds nothing; one loop is enough.
same_variable_different_sprite={count} sprites each have their own variable called '{name}'. These are different variables that just share a name. Rename them or use one 'for all sprites' variable.
sequential_actions=The same block is repeated {count} times in a row. A repeat loop does the same and is easier to change.
sprite_naming=The name '{sprite}' does not describe this sprite. Give it a meaningful name.
unnecessary_if_after_until=This if checks the very condition the 'repeat until' above just made true, so it is always taken. Remove the if and keep its blocks.
unnecessary_loop=This repeat block runs {count} time(s), so the loop changes nothing. Remove the loop or raise the count.
unused_custom_block=The custom block '{proccode}' is never called. Call it somewhere or delete it.
unused_parameter=The parameter '{param}' of custom block '{proccode}' is never used inside the block. Use it or remove it from the definition.
unused_variable=The variable '{name}' is never used by any script. Delete it or put it to work.
variable_initialization_race=Two scripts with the same hat set '{variable}' to different values ({value1} and {value2}). Which one wins is a matter of timing. Initialize the variable in one place.
)";
}

}  // namespace sb3lint::hints
