// Types mirroring the service's frozen JSON schema (docs/formats.md).

export interface Span {
  start: number;
  end: number;
}

export interface RuleView {
  index: number;
  text: string;
  span: Span;
}

export interface SessionCreated {
  id: string;
  rules: RuleView[];
}

export type Substitution = Record<string, string | number>;

export interface UnsatisfiedFinding {
  rule_index: number;
  rule: string;
  span: Span;
  substitution: Substitution;
  instance: string;
}

export interface BlockedCandidate {
  rule_index: number;
  substitution: Substitution;
  instance: string;
  violated: string;
}

export interface BlockedEntry {
  literal: string;
  candidates: BlockedCandidate[];
}

export interface LoopFinding {
  literals: string[];
  blocked: BlockedEntry[];
}

export interface Explanation {
  verdict: "is-answer-set" | "not-answer-set";
  unsatisfied: UnsatisfiedFinding[];
  unfounded_loops: LoopFinding[];
}

export interface ApiError {
  error: {
    kind: string;
    line?: number;
    col?: number;
    message?: string;
  };
}
