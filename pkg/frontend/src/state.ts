// View-state model: the transcript mirrors the server session exactly; all
// state transitions are pure so they can be tested without a DOM.

import type { EvidenceView, Source, TurnPayload } from "./api";

export interface SrSlots {
  context: string;
  question: string;
  predicate: string;
  answerType: string;
}

export type SourceFilter = Source | "ALL";

export interface ViewState {
  sessionId: string | null;
  transcript: TurnPayload[];
  selectedTurn: number | null;
  editor: SrSlots | null;
  sourceFilter: SourceFilter;
  error: string | null;
  staleSession: boolean;
}

export function initialState(): ViewState {
  return {
    sessionId: null,
    transcript: [],
    selectedTurn: null,
    editor: null,
    sourceFilter: "ALL",
    error: null,
    staleSession: false,
  };
}

const BLANK = "_";

export function parseSr(text: string): SrSlots {
  const slots = text.split(" | ");
  if (slots.length !== 4) {
    throw new Error(`expected 4 slots, got ${slots.length}`);
  }
  const clean = (slot: string) => (slot === BLANK ? "" : slot);
  return {
    context: clean(slots[0]),
    question: clean(slots[1]),
    predicate: clean(slots[2]),
    answerType: clean(slots[3]),
  };
}

export function serializeSr(slots: SrSlots): string {
  const emit = (text: string) => (text.trim() === "" ? BLANK : text.trim());
  return [
    emit(slots.context),
    emit(slots.question),
    emit(slots.predicate),
    emit(slots.answerType),
  ].join(" | ");
}

export function slotError(slots: SrSlots): string | null {
  for (const value of [slots.context, slots.question, slots.predicate, slots.answerType]) {
    if (value.includes("|")) {
      return 'slot text may not contain "|"';
    }
  }
  return null;
}

export function applyServerTurn(state: ViewState, payload: TurnPayload): ViewState {
  const transcript = state.transcript.slice();
  if (payload.turn < transcript.length) {
    transcript[payload.turn] = payload; // steering replaced a stored turn
  } else {
    transcript.push(payload);
  }
  return { ...state, transcript, error: null };
}

export function selectTurn(state: ViewState, index: number): ViewState {
  const turn = state.transcript[index];
  if (!turn) return state;
  return { ...state, selectedTurn: index, editor: parseSr(turn.sr) };
}

export function clearSelection(state: ViewState): ViewState {
  return { ...state, selectedTurn: null, editor: null };
}

export function setFilter(state: ViewState, filter: SourceFilter): ViewState {
  return { ...state, sourceFilter: filter };
}

export function visibleEvidences(
  turn: TurnPayload,
  filter: SourceFilter,
): EvidenceView[] {
  const kept =
    filter === "ALL"
      ? turn.evidences.slice()
      : turn.evidences.filter((e) => e.source === filter);
  kept.sort((a, b) => b.score - a.score || a.rank - b.rank);
  return kept;
}

export function answerDiff(before: TurnPayload, after: TurnPayload) {
  return {
    changed: before.answer !== after.answer,
    before: before.answer,
    after: after.answer,
  };
}

export interface ServerTurnSummary {
  question: string;
  answer: string;
  sr: string;
}

/** The transcript must mirror the server replay exactly. */
export function transcriptMatches(
  state: ViewState,
  serverTurns: ServerTurnSummary[],
): boolean {
  if (state.transcript.length !== serverTurns.length) return false;
  return state.transcript.every(
    (turn, index) =>
      turn.question === serverTurns[index].question &&
      turn.answer === serverTurns[index].answer &&
      turn.sr === serverTurns[index].sr,
  );
}
