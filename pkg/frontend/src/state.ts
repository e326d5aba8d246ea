// Workbench state and its pure transitions.
//
// Invariant: `stale` is set by every edit of the program or the literal list
// and cleared only when a fresh explanation arrives.

import type { Explanation, RuleView, SessionCreated } from "./types.js";

export interface WorkbenchState {
  sessionId: string | null;
  programText: string;
  rules: RuleView[];
  literals: string[];
  explanation: Explanation | null;
  stale: boolean;
  error: string | null;
}

export function initialState(): WorkbenchState {
  return {
    sessionId: null,
    programText: "",
    rules: [],
    literals: [],
    explanation: null,
    stale: true,
    error: null,
  };
}

export function programLoaded(
  state: WorkbenchState,
  programText: string,
  session: SessionCreated,
): WorkbenchState {
  return {
    ...state,
    sessionId: session.id,
    programText,
    rules: session.rules,
    stale: true,
    error: null,
  };
}

export function toggleLiteral(state: WorkbenchState, literal: string): WorkbenchState {
  const present = state.literals.includes(literal);
  const literals = present
    ? state.literals.filter((l) => l !== literal)
    : [...state.literals, literal];
  return { ...state, literals, stale: true, error: null };
}

export function addLiteral(state: WorkbenchState, literal: string): WorkbenchState {
  const trimmed = literal.trim();
  if (!trimmed || state.literals.includes(trimmed)) {
    return state;
  }
  return { ...state, literals: [...state.literals, trimmed], stale: true, error: null };
}

export function removeLiteral(state: WorkbenchState, literal: string): WorkbenchState {
  return {
    ...state,
    literals: state.literals.filter((l) => l !== literal),
    stale: true,
    error: null,
  };
}

export function adoptAnswerSet(state: WorkbenchState, literals: string[]): WorkbenchState {
  return { ...state, literals: [...literals], stale: true, error: null };
}

export function explanationReceived(
  state: WorkbenchState,
  explanation: Explanation,
): WorkbenchState {
  return { ...state, explanation, stale: false, error: null };
}

export function failed(state: WorkbenchState, message: string): WorkbenchState {
  return { ...state, error: message };
}

/** Literals whose strong negation is also present: flagged before any request. */
export function conflictingLiterals(literals: string[]): Set<string> {
  const set = new Set(literals);
  const conflicts = new Set<string>();
  for (const l of set) {
    const negated = l.startsWith("-") ? l.slice(1) : `-${l}`;
    if (set.has(negated)) {
      conflicts.add(l);
      conflicts.add(negated);
    }
  }
  return conflicts;
}
