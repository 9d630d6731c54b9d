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

const char* germanBundle() {
  return R"(# Deutsche Hinweistexte, eine Zeile pro Finder-Id.
ambiguous_custom_block_signature=Der eigene Block '{proccode}' ist in '{sprite}' {count}-mal definiert. Scratch kann die Definitionen nicht unterscheiden. Benenne sie um oder entferne die Duplikate.
ambiguous_parameter_name=Der eigene Block '{proccode}' hat mehrere Parameter mit dem Namen '{param}'. Die Verwendungen im Block sind nicht unterscheidbar. Gib jedem Parameter einen eigenen Namen.
call_without_definition=Hier wird der eigene Block '{proccode}' aufgerufen, aber es gibt keine Definition dafür in dieser Figur. Definiere den Block oder lösche den Aufruf.
expression_as_touching_or_color=Dieses Feld erwartet eine feste Auswahl ({expected}), aber '{opcode}' ist eingesetzt. Die Prüfung funktioniert so nicht. Wähle stattdessen einen passenden Wert aus dem Menü.
illegal_parameter_refactor=Der Textparameter '{param}' wird verwendet, wo eine Wahr/Falsch-Bedingung stehen muss. Er verhält sich nie wie eine Bedingung. Verwende einen Wahrheitswert-Parameter.
missing_termination_condition=Dieses 'wiederhole bis' hat keine Bedingung und läuft deshalb endlos. Ergänze die Bedingung, die die Schleife beenden soll.
missing_wait_until_condition=Dieses 'warte bis' hat keine Bedingung, das Skript wartet deshalb für immer. Ergänze die Bedingung, auf die gewartet werden soll.
orphaned_parameter=Der Parameter '{param}' wird vom eigenen Block '{proccode}' nicht mehr deklariert. Er liefert nur noch einen leeren Standardwert. Entferne ihn oder deklariere den Parameter erneut.
parameter_out_of_scope=Der Parameter '{param}' wird außerhalb seines eigenen Blocks verwendet. Hier draußen hat er keinen Wert. Verschiebe die Blöcke in den eigenen Block oder verwende eine Variable.
missing_backdrop_switch=Dieses Skript wartet auf den Bühnenbildwechsel zu '{backdrop}', aber kein Block wechselt je dorthin; das Skript startet also nie. Ergänze einen Wechsel oder entferne das Skript.
missing_erase_all=Dieses Projekt zeichnet mit dem Stift, löscht aber nie. Nach einem Neustart sind die alten Linien noch da. Ergänze 'lösche alles', zum Beispiel beim Klick auf die grüne Flagge.
missing_pen_down=Es gibt ein 'Stift anheben', aber der Stift wird nie abgesenkt; es wird also nie gezeichnet. Ergänze 'Stift absenken', wo das Zeichnen beginnen soll.
missing_pen_up=Der Stift wird abgesenkt, aber nie angehoben; die Figur zeichnet deshalb überall hin. Ergänze 'Stift anheben', wo das Zeichnen enden soll.
missing_resource=Hier wird {kind} '{name}' verwendet, aber '{sprite}' hat nichts mit diesem Namen. Wähle einen vorhandenen Eintrag oder lege '{name}' an.
stuttering_movement=Beim Drücken von '{key}' bewegt sich die Figur nur einmal pro Tastenwiederholung; das ruckelt. Verwende eine Dauerschleife mit 'falls Taste gedrückt' für flüssige Bewegung.
blocking_if_else=Beide Zweige dieses falls-sonst stoppen das Skript; die Blöcke danach können nie laufen. Entferne sie oder lass einen Zweig weiterlaufen.
comparing_literals=Dieser Vergleich prüft {left} gegen {right}. Beides sind feste Werte, das Ergebnis ist immer gleich. Wolltest du eine Variable vergleichen?
custom_block_with_forever=Der eigene Block '{proccode}' endet in einer Dauerschleife und kehrt nie zurück; die Blöcke nach dem Aufruf laufen nie. Verschiebe sie oder entferne die Dauerschleife.
custom_block_with_termination=Der eigene Block '{proccode}' stoppt das Skript immer; die Blöcke nach dem Aufruf laufen nie. Verschiebe sie vor den Aufruf oder ändere den Block.
delete_clone_after_broadcast=Dieser Klon löscht sich direkt nach dem Senden von '{message}'. Soll der Klon auf die Nachricht reagieren, existiert er schon nicht mehr. Verwende 'sende an alle und warte' oder tausche die Reihenfolge.
endless_recursion='{name}' löst sich selbst ohne Abbruchbedingung aus und läuft deshalb endlos. Ergänze eine Bedingung, die die Rekursion beendet.
forever_inside_loop=Eine Dauerschleife in einer anderen Schleife endet nie; die äußere Schleife kommt nie über die erste Runde hinaus. Entferne eine der Schleifen.
inappropriate_hatblock=Dieses Flaggen-Skript löscht 'diesen Klon', aber beim Klick auf die Flagge ist die Figur kein Klon. Verwende 'Wenn ich als Klon entstehe' zum Aufräumen.
interrupted_loop_sensing=Diese Schleife prüft eine Bedingung, führt aber auch '{opcode}' aus, das Zeit braucht. Währenddessen wird nicht geprüft; Ereignisse können verloren gehen. Prüfe in einer eigenen Schleife.
message_never_received=Die Nachricht '{message}' wird hier gesendet, aber kein Skript empfängt sie; das Senden bewirkt nichts. Ergänze ein 'Wenn ich ... empfange'-Skript oder entferne das Senden.
message_never_sent=Dieses Skript wartet auf die Nachricht '{message}', aber niemand sendet sie; es startet also nie. Ergänze ein Senden oder entferne das Skript.
missing_ask=Der Block 'Antwort' wird verwendet, aber das Projekt stellt nie eine Frage; 'Antwort' bleibt leer. Ergänze vorher einen 'frage ... und warte'-Block.
missing_clone_call=Das Skript 'Wenn ich als Klon entstehe' läuft nie, weil '{sprite}' nie geklont wird. Ergänze irgendwo 'erzeuge Klon von'.
missing_clone_initialization=Hier wird ein Klon von '{target}' erzeugt, aber '{target}' hat kein 'Wenn ich als Klon entstehe'-Skript; der Klon tut nichts. Ergänze das Klon-Skript.
missing_initialization='{name}' wird hier benutzt, bevor es gesetzt wird. Es gilt der Restwert vom letzten Lauf, was überraschen kann. Setze den Wert am Skriptanfang.
missing_loop_sensing=Diese Bedingung wird nur ein einziges Mal geprüft, genau wenn das Skript sie erreicht. Soll sie dauerhaft reagieren, prüfe sie in einer Dauerschleife.
no_working_scripts=Keines der Skripte in '{sprite}' kann laufen: Sie sind leer oder hängen an keinem Ereignisblock. Hänge sie unter einen Kopfblock oder entferne sie.
position_equals_check=Hier wird eine Position auf exakte Gleichheit geprüft. Positionen ändern sich in Schritten und können den Wert überspringen; die Prüfung wird womöglich nie wahr. Vergleiche mit < oder >.
recursive_cloning=Jeder Klon von '{sprite}' erzeugt sofort einen weiteren Klon; die Klone vermehren sich, bis Scratch keine mehr erlaubt. Ergänze eine Bedingung um 'erzeuge Klon'.
stop_after_say=Das Skript stoppt direkt nach 'sage'; die Sprechblase verschwindet sofort. Verwende 'sage ... für Sekunden' oder entferne das Stoppen.
terminated_loop=Diese Schleife wird schon in der ersten Runde gestoppt und wiederholt deshalb nie. Entferne die Schleife oder mache das Stoppen bedingt.
type_error=Dieser Vergleich prüft den Text {left} gegen die Zahl {right}; das passt nie zusammen. Prüfe, ob du den richtigen Block oder Wert gewählt hast.
variable_as_literal=Der Text '{literal}' steht hier als fester Wert, aber es gibt eine Variable mit diesem Namen. Meintest du den Variablenblock '{literal}' statt des Namens?
busy_waiting=Diese Dauerschleife wartet nur darauf, das Skript zu stoppen. Ein einzelner 'warte bis'-Block tut dasselbe und ist leichter zu lesen.
cloned_code=Diese {length} Blöcke kommen an anderer Stelle noch einmal vor (Klon Typ {type}). Lagere sie in einen eigenen Block aus, damit es den Code nur einmal gibt.
code_lying_around=Diese Blöcke hängen an keinem Ereignisblock und laufen deshalb nie. Lösche sie oder hänge sie unter einen Kopfblock.
double_if=Zwei falls-Blöcke hintereinander prüfen dieselbe Bedingung. Fasse sie zu einem zusammen.
duplicate_sprite='{sprite}' und '{other}' enthalten exakt dieselben Skripte. Verwende Klone oder geteilte eigene Blöcke statt kopierter Figuren.
duplicated_script=Diese Figur enthält dasselbe Skript zweimal. Entferne eine Kopie oder verwende einen eigenen Block, wenn die Schritte zweimal gebraucht werden.
empty_control_body=Dieser '{kind}'-Block hat einen leeren Rumpf und tut nichts. Fülle ihn mit Blöcken oder entferne ihn.
empty_custom_block=Der eigene Block '{proccode}' hat keinen Rumpf; ein Aufruf bewirkt nichts. Fülle ihn oder lösche ihn.
empty_project=Das Projekt hat keine Figuren und keine Skripte auf der Bühne; es kann noch nichts passieren. Füge eine Figur mit einem Skript hinzu.
empty_script=Unter diesem Ereignisblock hängt nichts; beim Auslösen passiert nichts. Ergänze Blöcke oder entferne den Kopfblock.
empty_sprite=Die Figur '{sprite}' hat gar keine Skripte. Gib ihr Verhalten oder entferne sie.
long_script=Dieses Skript ist {length} Blöcke lang (mehr als {threshold}). Lange Skripte sind schwer zu lesen. Teile es mit eigenen Blöcken oder Nachrichten.
message_naming=Der Nachrichtenname '{message}' verrät nicht, was er auslöst. Benenne ihn so, dass man es versteht.
middle_man=Dieser {kind} reicht die Arbeit nur an '{target}' weiter. Löse '{target}' direkt aus und entferne den Zwischenschritt.
multi_attribute_modification='{name}' wird {count}-mal direkt hintereinander geändert; nur das Gesamtergebnis bleibt. Fasse die Blöcke zu einem zusammen.
nested_loops=Diese Schleife enthält nichts außer einer weiteren Schleife. Die äußere bringt nichts; eine Schleife genügt.
same_variable_different_sprite={count} Figuren haben je eine eigene Variable namens '{name}'. Das sind verschiedene Variablen mit gleichem Namen. Benenne sie um oder verwende eine Variable 'für alle Figuren'.
sequential_actions=Derselbe Block wiederholt sich {count}-mal hintereinander. Eine Wiederholungsschleife tut dasselbe und ist leichter zu ändern.
sprite_naming=Der Name '{sprite}' beschreibt diese Figur nicht. Gib ihr einen sprechenden Namen.
unnecessary_if_after_until=Dieses falls prüft genau die Bedingung, die das 'wiederhole bis' darüber gerade wahr gemacht hat; es ist immer wahr. Entferne das falls und behalte seine Blöcke.
unnecessary_loop=Dieser Wiederholungsblock läuft {count}-mal; die Schleife ändert nichts. Entferne sie oder erhöhe die Anzahl.
unused_custom_block=Der eigene Block '{proccode}' wird nie aufgerufen. Rufe ihn auf oder lösche ihn.
unused_parameter=Der Parameter '{param}' des eigenen Blocks '{proccode}' wird im Rumpf nie verwendet. Verwende ihn oder entferne ihn aus der Definition.
unused_variable=Die Variable '{name}' wird von keinem Skript verwendet. Lösche sie oder setze sie ein.
variable_initialization_race=Zwei Skripte mit demselben Kopfblock setzen '{variable}' auf verschiedene Werte ({value1} und {value2}). Welcher gewinnt, ist Zufall. Initialisiere die Variable an einer Stelle.
)";
}

}  // namespace sb3lint::hints
