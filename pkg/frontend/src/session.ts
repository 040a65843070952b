// Session state management. Updates are never optimistic: the controller
// re-renders only from states the service has confirmed.

import {
  Answer,
  ApiClient,
  GraphFormat,
  Recommendation,
  SessionState,
} from "./api";

export type Listener = (controller: SessionController) => void;

export class SessionController {
  private state: SessionState | null = null;
  private recommendation: Recommendation | null = null;
  private measure: string | null = null;
  private listeners: Listener[] = [];

  constructor(private readonly api: ApiClient) {}

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) {
      listener(this);
    }
  }

  get current(): SessionState | null {
    return this.state;
  }

  get currentRecommendation(): Recommendation | null {
    return this.recommendation;
  }

  get selectedMeasure(): string | null {
    return this.measure;
  }

  get measures(): string[] {
    return this.state ? Object.keys(this.state.measures).sort() : [];
  }

  async load(document: string, format: GraphFormat, measures: string[]): Promise<void> {
    this.state = await this.api.createSession(document, format, measures);
    this.measure = this.measures[0] ?? null;
    await this.refreshRecommendation();
    this.notify();
  }

  async selectMeasure(measure: string): Promise<void> {
    this.measure = measure;
    await this.refreshRecommendation();
    this.notify();
  }

  async answer(argument: string, answer: Answer): Promise<void> {
    if (!this.state) {
      throw new Error("no active session");
    }
    this.state = await this.api.answer(this.state.id, argument, answer);
    await this.refreshRecommendation();
    this.notify();
  }

  async undo(): Promise<void> {
    if (!this.state) {
      throw new Error("no active session");
    }
    this.state = await this.api.undo(this.state.id);
    await this.refreshRecommendation();
    this.notify();
  }

  isUndecided(argument: string): boolean {
    return this.state !== null && this.state.labelling[argument] === "undec";
  }

  private async refreshRecommendation(): Promise<void> {
    this.recommendation = null;
    if (!this.state || !this.measure || this.state.undecided.length === 0) {
      return;
    }
    this.recommendation = await this.api.recommendation(this.state.id, this.measure);
  }
}
