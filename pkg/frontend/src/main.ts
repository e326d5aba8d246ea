// DOM wiring for the workbench page. Single session per tab; at most one
// explain request in flight; responses applied in order.

import { ApiRequestError, Client } from "./api.js";
import {
  WorkbenchState,
  addLiteral,
  adoptAnswerSet,
  conflictingLiterals,
  explanationReceived,
  failed,
  initialState,
  programLoaded,
  removeLiteral,
  toggleLiteral,
} from "./state.js";
import {
  renderFindings,
  renderLiterals,
  renderProgram,
  unsatisfiedRuleIndices,
} from "./render.js";

const client = new Client("");
let state: WorkbenchState = initialState();
let explainInFlight = false;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function update(next: WorkbenchState): void {
  state = next;
  const highlights = state.stale ? new Set<number>() : unsatisfiedRuleIndices(state.explanation);
  el("program-view").innerHTML = state.programText
    ? renderProgram(state.programText, state.rules, highlights)
    : "<p>Load a program to start.</p>";
  el("literal-list").innerHTML = renderLiterals(
    state.literals,
    conflictingLiterals(state.literals),
  );
  el("findings").innerHTML = state.explanation
    ? renderFindings(state.explanation, state.stale)
    : '<div class="verdict none">no explanation yet</div>';
  el("error-bar").textContent = state.error ?? "";
  el("error-bar").style.display = state.error ? "block" : "none";
  el<HTMLButtonElement>("explain-btn").disabled =
    !state.sessionId || state.literals.length === 0 || explainInFlight;
}

function describe(e: unknown): string {
  if (e instanceof ApiRequestError) {
    const err = e.payload?.error;
    if (err?.kind === "budget-exceeded") {
      return `search budget exceeded: ${err.message ?? ""} - try a smaller program or interpretation`;
    }
    if (err?.line !== undefined) {
      return `${err.kind} at ${err.line}:${err.col}: ${err.message ?? ""}`;
    }
    return err?.message ?? err?.kind ?? e.message;
  }
  return String(e);
}

async function loadProgram(): Promise<void> {
  const text = el<HTMLTextAreaElement>("program-input").value;
  try {
    const session = await client.createSession(text);
    update(programLoaded(state, text, session));
  } catch (e) {
    update(failed(state, describe(e)));
  }
}

async function runExplain(): Promise<void> {
  if (!state.sessionId || explainInFlight) {
    return;
  }
  explainInFlight = true;
  update(state);
  try {
    await client.putInterpretation(state.sessionId, state.literals);
    const explanation = await client.explain(state.sessionId, {
      minimalLoops: el<HTMLInputElement>("minimal-loops").checked,
    });
    update(explanationReceived(state, explanation));
  } catch (e) {
    update(failed(state, describe(e)));
  } finally {
    explainInFlight = false;
    update(state);
  }
}

async function listAnswerSets(): Promise<void> {
  if (!state.sessionId) {
    return;
  }
  try {
    const result = await client.answerSets(state.sessionId);
    const select = el<HTMLSelectElement>("answer-set-select");
    select.innerHTML = result.answer_sets
      .map(
        (s, i) =>
          `<option value="${i}">{ ${s.map((l) => l.replace(/</g, "&lt;")).join(", ")} }</option>`,
      )
      .join("");
    select.dataset.sets = JSON.stringify(result.answer_sets);
    el("adopt-controls").style.display = result.answer_sets.length ? "block" : "none";
    if (!result.answer_sets.length) {
      update(failed(state, "the program has no answer sets"));
    }
  } catch (e) {
    update(failed(state, describe(e)));
  }
}

function adoptSelected(): void {
  const select = el<HTMLSelectElement>("answer-set-select");
  const sets = JSON.parse(select.dataset.sets ?? "[]") as string[][];
  const chosen = sets[Number(select.value)];
  if (chosen) {
    update(adoptAnswerSet(state, chosen));
  }
}

export function wire(): void {
  el("load-btn").addEventListener("click", () => void loadProgram());
  el("explain-btn").addEventListener("click", () => void runExplain());
  el("answer-sets-btn").addEventListener("click", () => void listAnswerSets());
  el("adopt-btn").addEventListener("click", adoptSelected);
  el("add-literal-btn").addEventListener("click", () => {
    const input = el<HTMLInputElement>("literal-input");
    update(addLiteral(state, input.value));
    input.value = "";
  });
  el("literal-input").addEventListener("keydown", (ev) => {
    if ((ev as KeyboardEvent).key === "Enter") {
      el("add-literal-btn").click();
    }
  });
  el("literal-list").addEventListener("click", (ev) => {
    const target = ev.target as HTMLElement;
    if (target.dataset.action === "remove" && target.dataset.literal) {
      update(removeLiteral(state, target.dataset.literal));
    } else if (target.tagName === "CODE" && target.textContent) {
      update(toggleLiteral(state, target.textContent));
    }
  });
  update(state);
}

if (typeof document !== "undefined" && document.getElementById("load-btn")) {
  wire();
}
