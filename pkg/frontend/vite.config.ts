import { defineConfig } from "vite";

// relative asset paths so the bundle works under the service's /ui mount
export default defineConfig({
  base: "./",
});
