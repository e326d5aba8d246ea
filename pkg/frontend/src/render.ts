// Pure rendering of workbench views to HTML strings.
//
// Every displayed fact comes from an API response field; no semantics are
// computed here beyond string assembly.

import type { Explanation, RuleView, Substitution } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function formatSubstitution(subst: Substitution): string {
  return Object.keys(subst)
    .sort()
    .map((v) => `${v} = ${subst[v]}`)
    .join(", ");
}

/** Program text with the given rule spans wrapped in <mark> highlights. */
export function renderProgram(
  programText: string,
  rules: RuleView[],
  highlightIndices: Set<number>,
): string {
  const spans = rules
    .filter((r) => highlightIndices.has(r.index))
    .map((r) => r.span)
    .sort((a, b) => a.start - b.start);
  let html = "";
  let pos = 0;
  for (const span of spans) {
    html += escapeHtml(programText.slice(pos, span.start));
    html += `<mark class="unsat-rule">${escapeHtml(programText.slice(span.start, span.end))}</mark>`;
    pos = span.end;
  }
  html += escapeHtml(programText.slice(pos));
  return `<pre class="program">${html}</pre>`;
}

export function renderRuleList(rules: RuleView[]): string {
  const items = rules
    .map((r) => `<li value="${r.index}"><code>${escapeHtml(r.text)}</code></li>`)
    .join("");
  return `<ol class="rules">${items}</ol>`;
}

export function renderLiterals(literals: string[], conflicts: Set<string>): string {
  const items = [...literals]
    .sort()
    .map((l) => {
      const conflict = conflicts.has(l) ? ' class="conflict" title="inconsistent pair"' : "";
      return (
        `<li${conflict}><code>${escapeHtml(l)}</code>` +
        `<button type="button" data-literal="${escapeHtml(l)}" data-action="remove">x</button></li>`
      );
    })
    .join("");
  return `<ul class="literals">${items}</ul>`;
}

export function renderFindings(explanation: Explanation, stale: boolean): string {
  const staleClass = stale ? " stale" : "";
  if (explanation.verdict === "is-answer-set") {
    return `<div class="verdict ok${staleClass}">is an answer set</div>`;
  }
  const parts: string[] = [
    `<div class="verdict bad${staleClass}">not an answer set</div>`,
  ];
  if (explanation.unsatisfied.length > 0) {
    const rows = explanation.unsatisfied
      .map((f) => {
        const subst = formatSubstitution(f.substitution);
        const withPart = subst ? ` with <code>${escapeHtml(subst)}</code>` : "";
        return (
          `<li data-rule-index="${f.rule_index}">rule r${f.rule_index}${withPart}<br>` +
          `<code class="instance">${escapeHtml(f.instance)}</code><br>` +
          `<span class="origin">from <code>${escapeHtml(f.rule)}</code></span></li>`
        );
      })
      .join("");
    parts.push(`<section class="unsatisfied"><h3>Unsatisfied rules</h3><ul>${rows}</ul></section>`);
  }
  if (explanation.unfounded_loops.length > 0) {
    const loops = explanation.unfounded_loops
      .map((loop) => {
        const chips = loop.literals
          .map((l) => `<span class="chip">${escapeHtml(l)}</span>`)
          .join(" ");
        const blocked = loop.blocked
          .map((entry) => {
            const candidates = entry.candidates
              .map((c) => {
                const subst = formatSubstitution(c.substitution);
                const withPart = subst ? ` with ${escapeHtml(subst)}` : "";
                return (
                  `<li>blocked r${c.rule_index}${withPart} ` +
                  `<span class="condition">(condition ${escapeHtml(c.violated)})</span> ` +
                  `<code>${escapeHtml(c.instance)}</code></li>`
                );
              })
              .join("");
            const list = candidates
              ? `<ul>${candidates}</ul>`
              : "<ul><li>no candidate rule derives it</li></ul>";
            return `<li><code>${escapeHtml(entry.literal)}</code>${list}</li>`;
          })
          .join("");
        return `<li class="loop">${chips}<ul class="blocked">${blocked}</ul></li>`;
      })
      .join("");
    parts.push(`<section class="loops"><h3>Unfounded loops</h3><ul>${loops}</ul></section>`);
  }
  return parts.join("\n");
}

export function unsatisfiedRuleIndices(explanation: Explanation | null): Set<number> {
  if (!explanation) {
    return new Set();
  }
  return new Set(explanation.unsatisfied.map((f) => f.rule_index));
}
