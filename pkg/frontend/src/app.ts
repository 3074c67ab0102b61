// DOM wiring: render the current UiState and translate clicks into
// transitions + API calls. One request in flight at a time.

import { Direction, DrillApi, SessionExpiredError } from './api.js';
import {
  UiState,
  applyVerdict,
  backToConfiguring,
  beginExercise,
  canSubmit,
  composedAnswer,
  initialState,
  moveChipToAnswer,
  returnChip,
  serviceFailed,
  setFreeText,
} from './state.js';

export class DrillApp {
  state: UiState;

  constructor(
    private root: HTMLElement,
    private api: DrillApi,
    options: { direction?: Direction; level?: number; seed?: number } = {},
  ) {
    this.state = initialState(options.direction, options.level, options.seed);
    this.render();
  }

  private set(state: UiState): void {
    this.state = state;
    this.render();
  }

  async startExercise(direction: Direction, level: number, seed?: number): Promise<void> {
    if (this.state.pending) {
      return;
    }
    this.set({ ...this.state, direction, level, seed, pending: true, banner: undefined });
    try {
      const exercise = await this.api.newExercise({ direction, level, seed });
      this.set(beginExercise(this.state, exercise));
    } catch (err) {
      this.set(serviceFailed(this.state, `service unavailable: ${(err as Error).message}`));
    }
  }

  async submitAnswer(): Promise<void> {
    if (!canSubmit(this.state) || !this.state.sessionId) {
      return;
    }
    this.set({ ...this.state, pending: true });
    try {
      const verdict = await this.api.check(this.state.sessionId, composedAnswer(this.state));
      this.set(applyVerdict(this.state, verdict));
    } catch (err) {
      if (err instanceof SessionExpiredError) {
        // stale session: silently restart with the same settings
        this.set({ ...this.state, pending: false });
        await this.startExercise(this.state.direction, this.state.level, this.state.seed);
        return;
      }
      this.set(serviceFailed(this.state, `service unavailable: ${(err as Error).message}`));
    }
  }

  async nextExercise(): Promise<void> {
    await this.startExercise(this.state.direction, this.state.level, this.state.seed);
  }

  // ------------------------------------------------------------ rendering

  private render(): void {
    const s = this.state;
    this.root.innerHTML = '';
    if (s.banner) {
      const banner = el('div', 'banner', s.banner);
      banner.appendChild(this.button('Retry', 'retry', () =>
        this.startExercise(s.direction, s.level, s.seed)));
      this.root.appendChild(banner);
    }
    if (s.phase === 'configuring') {
      this.root.appendChild(this.renderConfiguring());
    } else {
      this.root.appendChild(this.renderExercise());
    }
  }

  private renderConfiguring(): HTMLElement {
    const panel = el('div', 'panel configuring');
    panel.appendChild(el('h2', '', 'Translation drill'));

    const direction = document.createElement('select');
    direction.id = 'direction';
    for (const [value, label] of [['en-fr', 'English → French'], ['fr-en', 'French → English']]) {
      const option = document.createElement('option');
      option.value = value;
      option.textContent = label;
      direction.appendChild(option);
    }
    direction.value = this.state.direction;

    const level = document.createElement('select');
    level.id = 'level';
    for (let i = 0; i <= 3; i += 1) {
      const option = document.createElement('option');
      option.value = String(i);
      option.textContent = `level ${i}`;
      level.appendChild(option);
    }
    level.value = String(this.state.level);

    const seed = document.createElement('input');
    seed.id = 'seed';
    seed.type = 'number';
    seed.placeholder = 'seed (optional)';
    if (this.state.seed !== undefined) {
      seed.value = String(this.state.seed);
    }

    panel.append(labelled('Direction', direction), labelled('Difficulty', level),
                 labelled('Seed', seed));
    panel.appendChild(this.button('Start', 'start', () => {
      const chosenSeed = seed.value === '' ? undefined : Number(seed.value);
      void this.startExercise(direction.value as Direction, Number(level.value), chosenSeed);
    }, this.state.pending));
    return panel;
  }

  private renderExercise(): HTMLElement {
    const s = this.state;
    const panel = el('div', `panel ${s.phase}`);
    panel.appendChild(el('p', 'source', s.sourceText ?? ''));

    const chips = el('div', 'chips');
    chips.id = 'chips';
    for (const chip of s.available) {
      chips.appendChild(this.chipButton(chip.id, chip.text, 'chip', () =>
        this.set(moveChipToAnswer(this.state, chip.id))));
    }
    panel.appendChild(chips);

    const composed = el('div', 'composed');
    composed.id = 'composed';
    for (const chip of s.composed) {
      composed.appendChild(this.chipButton(chip.id, chip.text, 'chip composed-chip', () =>
        this.set(returnChip(this.state, chip.id))));
    }
    panel.appendChild(composed);

    const preview = el('p', 'preview', composedAnswer(s));
    preview.id = 'preview';
    panel.appendChild(preview);

    const freeText = document.createElement('input');
    freeText.id = 'free-text';
    freeText.type = 'text';
    freeText.placeholder = 'or type the translation';
    freeText.value = s.freeText;
    freeText.disabled = s.phase !== 'answering' || s.pending;
    freeText.addEventListener('input', () => this.set(setFreeText(this.state, freeText.value)));
    panel.appendChild(freeText);

    if (s.phase === 'answering') {
      panel.appendChild(this.button('Submit', 'submit', () => void this.submitAnswer(),
                                    !canSubmit(s)));
    }

    if (s.phase === 'feedback' && s.lastVerdict) {
      const verdict = el('div', s.lastVerdict.correct ? 'verdict ok' : 'verdict ko',
                         s.lastVerdict.correct ? 'OK' : 'KO');
      verdict.id = 'verdict';
      panel.appendChild(verdict);
      const expected = el('p', 'expected', s.lastVerdict.expected);
      expected.id = 'expected';
      panel.appendChild(expected);
      panel.appendChild(this.button('Next', 'next', () => void this.nextExercise(), s.pending));
      panel.appendChild(this.button('Change settings', 'configure', () =>
        this.set(backToConfiguring(this.state))));
    }
    return panel;
  }

  private button(label: string, id: string, onClick: () => void, disabled = false): HTMLButtonElement {
    const button = document.createElement('button');
    button.id = id;
    button.textContent = label;
    button.disabled = disabled;
    button.addEventListener('click', onClick);
    return button;
  }

  private chipButton(id: number, text: string, cls: string, onClick: () => void): HTMLButtonElement {
    const button = document.createElement('button');
    button.className = cls;
    button.dataset.chipId = String(id);
    button.textContent = text;
    button.disabled = this.state.pending;
    button.addEventListener('click', onClick);
    return button;
  }
}

function el(tag: string, className: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function labelled(text: string, control: HTMLElement): HTMLElement {
  const wrap = document.createElement('label');
  wrap.append(`${text}: `, control);
  return wrap;
}
