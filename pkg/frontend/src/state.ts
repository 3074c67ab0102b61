// UI state machine, kept pure so transitions are unit-testable.
//
// Phases only move configuring -> answering -> feedback -> answering (next
// exercise) or back to configuring; a chip moved into the answer leaves the
// available pool, so |available| + |composed| is constant within an exercise.

import { Direction, DrillCheckResponse, DrillNewResponse } from './api.js';

export type Phase = 'configuring' | 'answering' | 'feedback';

export interface Chip {
  id: number;
  text: string;
}

export interface UiState {
  phase: Phase;
  direction: Direction;
  level: number;
  seed?: number;
  sessionId?: string;
  sourceText?: string;
  available: Chip[];
  composed: Chip[];
  freeText: string;
  pending: boolean;
  banner?: string;
  lastVerdict?: { correct: boolean; expected: string };
}

export function initialState(direction: Direction = 'en-fr', level = 0, seed?: number): UiState {
  return {
    phase: 'configuring',
    direction,
    level,
    seed,
    available: [],
    composed: [],
    freeText: '',
    pending: false,
  };
}

export function beginExercise(state: UiState, exercise: DrillNewResponse): UiState {
  return {
    ...state,
    phase: 'answering',
    sessionId: exercise.session_id,
    sourceText: exercise.source_text,
    available: exercise.tokens.map((text, id) => ({ id, text })),
    composed: [],
    freeText: '',
    pending: false,
    banner: undefined,
    lastVerdict: undefined,
  };
}

export function serviceFailed(state: UiState, message: string): UiState {
  return { ...state, phase: 'configuring', pending: false, banner: message };
}

export function backToConfiguring(state: UiState): UiState {
  return {
    ...state,
    phase: 'configuring',
    sessionId: undefined,
    sourceText: undefined,
    available: [],
    composed: [],
    freeText: '',
    pending: false,
  };
}

export function moveChipToAnswer(state: UiState, chipId: number): UiState {
  const chip = state.available.find((c) => c.id === chipId);
  if (!chip || state.phase !== 'answering') {
    return state;
  }
  return {
    ...state,
    available: state.available.filter((c) => c.id !== chipId),
    composed: [...state.composed, chip],
  };
}

export function returnChip(state: UiState, chipId: number): UiState {
  const chip = state.composed.find((c) => c.id === chipId);
  if (!chip || state.phase !== 'answering') {
    return state;
  }
  // the chip goes back where it came from, keeping the pool ordered by id
  const available = [...state.available, chip].sort((a, b) => a.id - b.id);
  return {
    ...state,
    available,
    composed: state.composed.filter((c) => c.id !== chipId),
  };
}

export function setFreeText(state: UiState, text: string): UiState {
  return { ...state, freeText: text };
}

// Reattach punctuation, apostrophes and hyphens the way the realizer spaces
// them, so chip assembly reproduces the exact expected sentence.
export function detokenize(tokens: string[]): string {
  let out = '';
  let glueNext = false;
  for (const token of tokens) {
    if (token === "'" || token === '-') {
      out += token;
      glueNext = true;
      continue;
    }
    if (/^[.,?!;:]$/.test(token)) {
      out += token;
      glueNext = false;
      continue;
    }
    out += out === '' || glueNext ? token : ` ${token}`;
    glueNext = false;
  }
  return out;
}

export function composedAnswer(state: UiState): string {
  const typed = state.freeText.trim();
  if (typed !== '') {
    return typed;
  }
  return detokenize(state.composed.map((c) => c.text));
}

export function canSubmit(state: UiState): boolean {
  return state.phase === 'answering' && !state.pending && composedAnswer(state) !== '';
}

export function applyVerdict(state: UiState, verdict: DrillCheckResponse): UiState {
  return {
    ...state,
    phase: 'feedback',
    pending: false,
    lastVerdict: { correct: verdict.correct, expected: verdict.expected },
  };
}
